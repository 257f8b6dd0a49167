//! Named codes from the RG[4,2] and RG[3,3] census tables.

use serde::Serialize;

use crate::codes::parse_matrix;
use crate::error::Result;
use crate::grid::GridCode;

const TABLE_4_2: &str = include_str!("../data/table1.txt");
const TABLE_3_3: &str = include_str!("../data/table2.txt");

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct LinkName {
    pub conway: String,
    /// Rolfsen (`6_3`, `8_4^2`) or Thistlethwaite (`L10a101`) name; empty when unnamed.
    pub classical: String,
}

impl LinkName {
    pub fn new(conway: &str, classical: &str) -> LinkName {
        LinkName { conway: conway.to_string(), classical: classical.to_string() }
    }

    /// Component count implied by the classical name: the superscript for
    /// Rolfsen links, 1 for knots. `None` for unnamed entries and
    /// Thistlethwaite links, whose names do not carry it.
    pub fn components(&self) -> Option<usize> {
        let c = &self.classical;
        if c.is_empty() || c.starts_with('L') {
            return None;
        }
        match c.split_once('^') {
            Some((_, sup)) => sup.parse().ok(),
            None => Some(1),
        }
    }

    pub fn is_link(&self) -> bool {
        self.classical.starts_with('L') || self.components().is_some_and(|c| c > 1)
    }
}

impl std::fmt::Display for LinkName {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.classical.is_empty() {
            write!(f, "{}", self.conway)
        } else {
            write!(f, "{} ({})", self.conway, self.classical)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub index: usize,
    pub name: LinkName,
    /// Code text as printed, without the grid prefix.
    pub text: String,
}

impl CatalogEntry {
    pub fn code(&self) -> Result<GridCode> {
        parse_matrix(&self.text)
    }
}

/// Parse the `index | conway | name | code` line format.
pub fn parse_table(text: &str) -> Vec<CatalogEntry> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .filter_map(|l| {
            let f: Vec<&str> = l.split('|').map(str::trim).collect();
            if f.len() != 4 {
                return None;
            }
            Some(CatalogEntry { index: f[0].parse().ok()?, name: LinkName::new(f[1], f[2]), text: f[3].to_string() })
        })
        .collect()
}

/// The 25 knots and links first appearing on RG[4,2].
pub fn table_4_2() -> Vec<CatalogEntry> {
    parse_table(TABLE_4_2)
}

/// The 64 knots and links first appearing on RG[3,3].
pub fn table_3_3() -> Vec<CatalogEntry> {
    parse_table(TABLE_3_3)
}

/// Small named diagrams used as fixtures and by the CLI.
pub fn named_codes() -> Vec<(LinkName, &'static str)> {
    [
        ("2", "2_1^2", "{{1,-2},{1,-2}}"),
        ("3", "3_1", "{{-2,1},{1,1}}"),
        ("4", "4_1^2", "{{1,1},{1,1}}"),
        ("2 2", "4_1", "{{-2,1,1},{1,1},{-2,-2}}"),
        ("5", "5_1", "{{1,2,1},{-2,1},{1,1}}"),
        ("3 2", "5_2", "{{1,1,1},{1,1},{-2,-2}}"),
        ("2 1 2", "5_1^2", "{{1,1,1},{-2,1},{1,-2}}"),
        ("6", "6_1^2", "{{1,2,1},{1,1},{1,1}}"),
        ("4 2", "6_1", "{{1,1,-1},{1,1},{-1,-1}}"),
        ("3 1 2", "6_2", "{{1,1,1},{1,1},{-2,1}}"),
        ("3 1 3", "7_4", "{{1,1,1},{1,1},{1,1}}"),
        ("2 1 1 2", "6_3", "{{2,-2,1},{1,1,-2},{-2,-2,-2},{1,1,1}}"),
        ("6^*", "6_2^3", "{{-1,-1,-2},{-2,-1,-2},{-2,2,-2},{-1,-1,-1}}"),
    ]
    .into_iter()
    .map(|(c, n, t)| (LinkName::new(c, n), t))
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(table_4_2().len(), 25);
        assert_eq!(table_3_3().len(), 64);
    }

    #[test]
    fn superscripts() {
        assert_eq!(LinkName::new("", "8_4^3").components(), Some(3));
        assert_eq!(LinkName::new("", "7_1").components(), Some(1));
        assert_eq!(LinkName::new("", "L10a101").components(), None);
        assert!(LinkName::new("", "L10a101").is_link());
    }
}
