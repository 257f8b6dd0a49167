//! Exhaustive generation of grid codes, isometry classes, table checks and
//! mirror distances to the unlink.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::{CatalogEntry, LinkName};
use crate::codes::{serialize_matrix, StateCode};
use crate::error::{Error, Result};
use crate::grid::{edge_count, EdgeLabel, GridCode};
use crate::invariants::{bracket, normalized_from_bracket, MAX_BRACKET_CROSSINGS};
use crate::isometry::IsometryGroup;
use crate::moves::{is_unlink, simplify_diagram, UnlinkStatus};
use crate::poly::LaurentPoly;
use crate::trace;

pub const MAX_STATE_EDGES: usize = 24;
pub const MAX_ALL_EDGES: usize = 14;
pub const MAX_CLASS_EDGES: usize = 10;
pub const MAX_UNLINK_CROSSINGS: usize = 12;

fn too_large(p: usize, q: usize, limit: usize) -> Result<usize> {
    let v = edge_count(p, q);
    if p == 0 || q == 0 {
        return Err(Error::Shape(format!("RG[{p},{q}] is empty")));
    }
    if v > limit {
        return Err(Error::TooLarge(format!("RG[{p},{q}] has {v} edges, limit {limit}")));
    }
    Ok(v)
}

/// All `2^v` Kauffman states of RG[p,q].
pub fn enumerate_states(p: usize, q: usize) -> Result<impl Iterator<Item = StateCode>> {
    let v = too_large(p, q, MAX_STATE_EDGES)?;
    Ok((0..1u64 << v).map(move |m| StateCode { p, q, m }))
}

/// The code with index `i` in base 4, most significant edge first, digits
/// in the order 1, -1, 2, -2.
pub fn code_at(p: usize, q: usize, index: u64) -> GridCode {
    let v = edge_count(p, q);
    let labels = (0..v).map(|e| EdgeLabel::ALL[((index >> (2 * (v - 1 - e))) & 3) as usize]).collect();
    GridCode::new(p, q, labels).expect("v labels")
}

/// All `4^v` labelings of RG[p,q].
pub fn enumerate_all(p: usize, q: usize) -> Result<impl Iterator<Item = GridCode>> {
    let v = too_large(p, q, MAX_ALL_EDGES)?;
    Ok((0..1u64 << (2 * v)).map(move |i| code_at(p, q, i)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassRecord {
    /// Orbit member with the smallest serialized form.
    pub representative: GridCode,
    pub orbit_size: usize,
    pub components: usize,
    pub crossings: usize,
    /// Crossings left after Reidemeister simplification of the diagram.
    pub reduced_crossings: usize,
    pub bracket: LaurentPoly,
    pub normalized: LaurentPoly,
    pub name: Option<LinkName>,
}

fn canonical(group: &IsometryGroup, code: &GridCode) -> (String, usize) {
    let mut images: Vec<String> = group.orbit(code).iter().map(serialize_matrix).collect();
    images.sort();
    (images[0].clone(), images.len())
}

/// One record per isometry orbit of the `4^v` codes, ordered by representative.
pub fn isometry_classes(p: usize, q: usize) -> Result<Vec<ClassRecord>> {
    isometry_classes_named(p, q, &[])
}

/// As `isometry_classes`, attaching names of catalog codes found in an orbit.
pub fn isometry_classes_named(p: usize, q: usize, names: &[(LinkName, GridCode)]) -> Result<Vec<ClassRecord>> {
    let v = too_large(p, q, MAX_CLASS_EDGES)?;
    let group = IsometryGroup::new(p, q);
    let mut named: HashMap<String, LinkName> = HashMap::new();
    for (name, code) in names.iter().filter(|(_, c)| (c.p(), c.q()) == (p, q)) {
        named.entry(canonical(&group, code).0).or_insert_with(|| name.clone());
    }
    let mut reps: Vec<(String, usize, GridCode)> = (0..1u64 << (2 * v))
        .into_par_iter()
        .filter_map(|i| {
            let code = code_at(p, q, i);
            let (min, size) = canonical(&group, &code);
            (min == serialize_matrix(&code)).then_some((min, size, code))
        })
        .collect();
    reps.sort_by(|a, b| a.0.cmp(&b.0));
    reps.into_par_iter()
        .map(|(text, orbit_size, code)| {
            let t = trace::trace(&code)?;
            let b = bracket(&code)?;
            Ok(ClassRecord {
                orbit_size,
                components: t.components,
                crossings: code.crossing_count(),
                reduced_crossings: simplify_diagram(&t.diagram).crossing_count(),
                normalized: normalized_from_bracket(&b, t.self_writhe),
                bracket: b,
                name: named.get(&text).cloned(),
                representative: code,
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub index: usize,
    pub name: LinkName,
    pub code: String,
    pub crossings: Option<usize>,
    pub components: Option<usize>,
    pub normalized: Option<LaurentPoly>,
    /// Whether the component count agrees with the name, when it implies one.
    pub components_match: Option<bool>,
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableReport {
    pub rows: Vec<TableRow>,
    /// Pairs of row indices with equal component counts and normalized
    /// polynomials.
    pub collisions: Vec<(usize, usize)>,
}

impl TableReport {
    pub fn parsed(&self) -> usize {
        self.rows.iter().filter(|r| r.error.is_none()).count()
    }

    pub fn mismatches(&self) -> Vec<usize> {
        self.rows.iter().filter(|r| r.components_match == Some(false)).map(|r| r.index).collect()
    }

    /// Collisions between rows not carrying the same name.
    pub fn unexplained_collisions(&self) -> Vec<(usize, usize)> {
        let name = |i: usize| self.rows.iter().find(|r| r.index == i).map(|r| r.name.classical.as_str()).unwrap_or("");
        self.collisions.iter().copied().filter(|&(a, b)| name(a).is_empty() || name(a) != name(b)).collect()
    }
}

/// Compute invariants of each table entry; bad rows are reported, not fatal.
pub fn classify_table(entries: &[CatalogEntry]) -> TableReport {
    let rows: Vec<TableRow> = entries
        .par_iter()
        .map(|e| {
            let mut row = TableRow {
                index: e.index,
                name: e.name.clone(),
                code: e.text.clone(),
                crossings: None,
                components: None,
                normalized: None,
                components_match: None,
                error: None,
            };
            let result = e.code().and_then(|code| {
                let t = trace::trace(&code)?;
                row.crossings = Some(code.crossing_count());
                row.components = Some(t.components);
                row.components_match = e.name.components().map(|c| c == t.components);
                if code.crossing_count() <= MAX_BRACKET_CROSSINGS {
                    row.normalized = Some(normalized_from_bracket(&bracket(&code)?, t.self_writhe));
                }
                Ok(())
            });
            if let Err(err) = result {
                row.error = Some(err.to_string());
            }
            row
        })
        .collect();
    let mut collisions = Vec::new();
    for (i, a) in rows.iter().enumerate() {
        for b in &rows[i + 1..] {
            if a.normalized.is_some() && a.normalized == b.normalized && a.components == b.components {
                collisions.push((a.index, b.index));
            }
        }
    }
    TableReport { rows, collisions }
}

/// Unlink outcomes when `k` crossings are replaced by mirrors.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct MirrorCount {
    pub k: usize,
    pub yes: u64,
    pub no: u64,
    pub unknown: u64,
}

/// Every way of replacing crossings by mirrors, tallied by the number replaced.
pub fn unlink_profile(code: &GridCode) -> Result<Vec<MirrorCount>> {
    code.ensure_classical()?;
    let crossings = code.crossing_edges();
    let n = crossings.len();
    if n > MAX_UNLINK_CROSSINGS {
        return Err(Error::TooManyCrossings(n, MAX_UNLINK_CROSSINGS));
    }
    let total = 3u64.pow(n as u32);
    let tallies = (0..total)
        .into_par_iter()
        .map(|index| {
            let mut c = code.clone();
            let mut rest = index;
            let mut k = 0;
            for &e in &crossings {
                match rest % 3 {
                    0 => {}
                    1 => {
                        c.set_label(e, EdgeLabel::Mir);
                        k += 1;
                    }
                    _ => {
                        c.set_label(e, EdgeLabel::Perp);
                        k += 1;
                    }
                }
                rest /= 3;
            }
            let mut t = vec![MirrorCount::default(); n + 1];
            match is_unlink(&c).expect("classical") {
                UnlinkStatus::Yes(_) => t[k].yes += 1,
                UnlinkStatus::No => t[k].no += 1,
                UnlinkStatus::Unknown => t[k].unknown += 1,
            }
            t
        })
        .reduce(
            || vec![MirrorCount::default(); n + 1],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    x.yes += y.yes;
                    x.no += y.no;
                    x.unknown += y.unknown;
                }
                a
            },
        );
    Ok(tallies.into_iter().enumerate().map(|(k, t)| MirrorCount { k, ..t }).collect())
}

/// Smallest `k` with an unlink, from a profile.
pub fn min_from_profile(profile: &[MirrorCount]) -> Result<usize> {
    for t in profile {
        if t.yes > 0 {
            return Ok(t.k);
        }
        if t.unknown > 0 {
            return Err(Error::Unknown(t.k));
        }
    }
    Err(Error::Unknown(profile.len()))
}

/// Largest `k` with a non-unlink, from a profile.
pub fn max_from_profile(profile: &[MirrorCount]) -> Result<usize> {
    for t in profile.iter().rev() {
        if t.no > 0 {
            return Ok(t.k);
        }
        if t.unknown > 0 {
            return Err(Error::Unknown(t.k));
        }
    }
    Ok(0)
}

/// Fewest crossings to replace by mirrors to get an unlink.
pub fn min_mirrors_to_unlink(code: &GridCode) -> Result<usize> {
    min_from_profile(&unlink_profile(code)?)
}

/// Most crossings that can be replaced by mirrors without getting an unlink.
/// Zero also when the code is an unlink already.
pub fn max_mirrors_without_unlink(code: &GridCode) -> Result<usize> {
    max_from_profile(&unlink_profile(code)?)
}

/// Both numbers from one pass.
pub fn unlink_distance(code: &GridCode) -> Result<(usize, usize)> {
    let profile = unlink_profile(code)?;
    Ok((min_from_profile(&profile)?, max_from_profile(&profile)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::parse_matrix;

    #[test]
    fn counts() {
        assert_eq!(enumerate_states(3, 3).unwrap().count(), 4096);
        assert_eq!(enumerate_all(2, 1).unwrap().count(), 4);
        assert_eq!(enumerate_all(3, 2).unwrap().count(), 16384);
        assert!(enumerate_all(4, 3).is_err());
    }

    #[test]
    fn small_classes() {
        assert_eq!(isometry_classes(1, 1).unwrap().len(), 1);
        let classes = isometry_classes(2, 2).unwrap();
        assert_eq!(classes.len(), 55);
        assert_eq!(classes.iter().map(|c| c.orbit_size).sum::<usize>(), 256);
    }

    #[test]
    fn crossing_free_distance() {
        let c = parse_matrix("{{2,2},{2,-2}}").unwrap();
        assert_eq!(unlink_distance(&c).unwrap(), (0, 0));
    }
}
