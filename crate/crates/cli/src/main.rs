use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use mirrorknot_core::algebra::{canonical_representation, decompose, product};
use mirrorknot_core::catalog::{named_codes, table_3_3, table_4_2};
use mirrorknot_core::codes::{
    decode_four, decode_state, four_code, minimal_four_code, minimal_six_code, FourCode, StateCode,
};
use mirrorknot_core::enumerate::{
    classify_table, enumerate_all, isometry_classes_named, max_from_profile, min_from_profile, unlink_profile,
};
use mirrorknot_core::invariants::{
    bracket_with_limit, l_family, l_polynomial_with_limit, normalized_from_bracket, KnownFamily, MAX_BRACKET_CROSSINGS,
    MAX_L_CROSSINGS,
};
use mirrorknot_core::mosaic::{grid_diagram_dimension, mosaic_number_upper_bound, to_mosaic};
use mirrorknot_core::moves::{default_budget, reduce};
use mirrorknot_core::render::render_svg;
use mirrorknot_core::{parse_matrix, serialize_matrix, trace, Error, GridCode};

#[derive(Parser)]
#[command(name = "mirrorknot", version, about = "Knots and links as mirror-curves on rectangular grids")]
struct Cli {
    /// Plain text instead of JSON.
    #[arg(long, global = true)]
    text: bool,
    /// Worker threads for parallel enumeration.
    #[arg(long, global = true, env = "MIRRORKNOT_JOBS")]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a code and print it in normal form.
    Parse { code: String },
    /// Trace the mirror-curve.
    Trace { code: String },
    /// Simplify by Reidemeister, mirror and all-over moves.
    Reduce {
        code: String,
        /// Maximum number of moves (default 10 n^2).
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Kauffman bracket.
    Bracket {
        code: String,
        /// Print the writhe-normalized polynomial.
        #[arg(long)]
        normalized: bool,
        /// Raise the crossing limit; cost doubles per crossing.
        #[arg(long)]
        max_crossings: Option<usize>,
    },
    /// Kauffman L-polynomial.
    Lpoly {
        code: String,
        /// Raise the crossing limit; cost grows exponentially.
        #[arg(long)]
        max_crossings: Option<usize>,
    },
    /// L-polynomial of a two-bridge family: p, p2, 3p or pq.
    Family { kind: String, p: u32, q: Option<u32> },
    /// Semigroup product of two codes.
    Product { left: String, right: String },
    /// Split a code into two Kauffman states.
    Decompose { code: String },
    /// Four-number code of the given diagram.
    Encode { code: String },
    /// Decode `p q m` (state) or `p q m n` (four-number code).
    Decode { p: usize, q: usize, m: u64, n: Option<u64> },
    /// Minimal four-number code over the isometry orbit.
    Minimal {
        code: String,
        /// Minimal six-number code instead.
        #[arg(long)]
        six: bool,
    },
    /// Canonical representation of an alternating code.
    Canonical { code: String },
    /// List all codes of RG[p,q].
    Enumerate {
        p: usize,
        q: usize,
        /// Only print the count.
        #[arg(long)]
        count: bool,
    },
    /// Isometry classes of RG[p,q], or a census table (`--table 1` or `2`).
    Classify {
        p: Option<usize>,
        q: Option<usize>,
        #[arg(long)]
        table: Option<u8>,
    },
    /// Knot mosaic of a code.
    Mosaic { code: String },
    /// Mirrors needed to reach, or avoid, an unlink.
    Unlinkdist { code: String },
    /// SVG drawing.
    Render {
        code: String,
        /// Output file; standard output when absent.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

fn code(text: &str) -> mirrorknot_core::Result<GridCode> {
    parse_matrix(text)
}

fn four_json(f: FourCode) -> Value {
    json!([f.p, f.q, f.m, f.n])
}

fn state_json(s: StateCode) -> Value {
    json!([s.p, s.q, s.m])
}

fn family(kind: &str, p: u32, q: Option<u32>) -> anyhow::Result<KnownFamily> {
    Ok(match (kind, q) {
        ("p", None) => KnownFamily::P(p),
        ("p2", None) => KnownFamily::P2(p),
        ("3p", None) => KnownFamily::ThreeP(p),
        ("pq", Some(q)) => KnownFamily::PQ(p, q),
        _ => return Err(Error::Parse(format!("unknown family {kind:?}; use p N, p2 N, 3p N or pq P Q")).into()),
    })
}

// Output for JSON mode and for --text.
struct Output {
    json: Value,
    text: String,
}

fn out(json: Value, text: impl Into<String>) -> Output {
    Output { json, text: text.into() }
}

fn run(cli: &Cli) -> anyhow::Result<Option<Output>> {
    Ok(Some(match &cli.command {
        Command::Parse { code: c } => {
            let c = code(c)?;
            let text = serialize_matrix(&c);
            out(
                json!({"code": text, "p": c.p(), "q": c.q(), "labels": c.edge_count(), "crossings": c.crossing_count()}),
                text,
            )
        }
        Command::Trace { code: c } => {
            let t = trace(&code(c)?)?;
            let text = format!("{} components, {} crossings", t.components, t.crossings.len());
            out(json!({"components": t.components, "crossings": t.crossings.len()}), text)
        }
        Command::Reduce { code: c, budget } => {
            let c = code(c)?;
            let log = reduce(&c, budget.unwrap_or_else(|| default_budget(&c)))?;
            out(serde_json::to_value(&log)?, log.to_string().trim_end())
        }
        Command::Bracket { code: c, normalized, max_crossings } => {
            let c = code(c)?;
            let mut b = bracket_with_limit(&c, max_crossings.unwrap_or(MAX_BRACKET_CROSSINGS))?;
            if *normalized {
                b = normalized_from_bracket(&b, trace(&c)?.self_writhe);
            }
            out(json!({"polynomial": b.to_string()}), b.to_string())
        }
        Command::Lpoly { code: c, max_crossings } => {
            let l = l_polynomial_with_limit(&code(c)?, max_crossings.unwrap_or(MAX_L_CROSSINGS))?;
            out(json!({"polynomial": l.to_string()}), l.to_string())
        }
        Command::Family { kind, p, q } => {
            let l = l_family(family(kind, *p, *q)?)?;
            out(json!({"polynomial": l.to_string()}), l.to_string())
        }
        Command::Product { left, right } => {
            let pr = serialize_matrix(&product(&code(left)?, &code(right)?)?);
            out(json!(pr), pr)
        }
        Command::Decompose { code: c } => {
            let (s1, s2) = decompose(&code(c)?)?;
            let text = format!("{} * {}", serialize_matrix(&decode_state(s1)?), serialize_matrix(&decode_state(s2)?));
            out(json!({"left": state_json(s1), "right": state_json(s2)}), text)
        }
        Command::Encode { code: c } => {
            let f = four_code(&code(c)?)?;
            out(four_json(f), format!("{} {} {} {}", f.p, f.q, f.m, f.n))
        }
        Command::Decode { p, q, m, n } => {
            let c = match n {
                Some(n) => decode_four(FourCode::new(*p, *q, *m, *n)?)?,
                None => decode_state(StateCode::new(*p, *q, *m)?)?,
            };
            let text = serialize_matrix(&c);
            out(json!(text), text)
        }
        Command::Minimal { code: c, six } => {
            let c = code(c)?;
            if *six {
                let s = minimal_six_code(&c)?;
                let v = [s.p as u64, s.q as u64, s.m1, s.n1, s.m2, s.n2];
                out(json!(v), v.map(|x| x.to_string()).join(" "))
            } else {
                let f = minimal_four_code(&c)?;
                out(four_json(f), format!("{} {} {} {}", f.p, f.q, f.m, f.n))
            }
        }
        Command::Canonical { code: c } => {
            let f = canonical_representation(&code(c)?)?;
            out(four_json(f), format!("{} {} {} {}", f.p, f.q, f.m, f.n))
        }
        Command::Enumerate { p, q, count } => {
            let codes = enumerate_all(*p, *q)?;
            if *count {
                let n = codes.count();
                out(json!({"count": n}), n.to_string())
            } else {
                let all: Vec<String> = codes.map(|c| serialize_matrix(&c)).collect();
                let text = all.join("\n");
                out(json!(all), text)
            }
        }
        Command::Classify { p, q, table } => match (p, q, table) {
            (None, None, Some(t)) => {
                let entries = match t {
                    1 => table_4_2(),
                    2 => table_3_3(),
                    _ => bail!(Error::Parse(format!("no table {t}; use 1 or 2"))),
                };
                let report = classify_table(&entries);
                let text = report
                    .rows
                    .iter()
                    .map(|r| {
                        let poly = r.normalized.as_ref().map_or("-".to_string(), |x| x.to_string());
                        format!(
                            "{}\t{}\t{}\t{}",
                            r.index,
                            r.name,
                            r.components.map_or("-".into(), |c| c.to_string()),
                            poly
                        )
                    })
                    .collect::<Vec<_>>()
                    .join("\n");
                out(serde_json::to_value(&report)?, text)
            }
            (Some(p), Some(q), None) => {
                let mut names = Vec::new();
                for (name, text) in named_codes() {
                    names.push((name, code(text)?));
                }
                for e in table_4_2().into_iter().chain(table_3_3()) {
                    names.push((e.name.clone(), e.code()?));
                }
                let classes = isometry_classes_named(*p, *q, &names)?;
                let text = classes
                    .iter()
                    .map(|c| {
                        let name = c.name.as_ref().map_or(String::new(), |n| n.to_string());
                        format!(
                            "{}\t{}\t{}\t{}\t{}",
                            serialize_matrix(&c.representative),
                            c.orbit_size,
                            c.components,
                            c.normalized,
                            name
                        )
                    })
                    .collect::<Vec<_>>()
                    .join("\n");
                out(serde_json::to_value(&classes)?, text)
            }
            _ => bail!(Error::Parse("classify takes P Q or --table N".into())),
        },
        Command::Mosaic { code: c } => {
            let c = code(c)?;
            let m = to_mosaic(&c)?;
            let tiles: Vec<Vec<&str>> = m.tiles.iter().map(|r| r.iter().map(|t| t.mnemonic()).collect()).collect();
            let j = json!({
                "n": m.n,
                "tiles": tiles,
                "suitably_connected": m.suitably_connected(),
                "components": m.component_count()?,
                "crossings": m.crossing_tiles(),
                "mosaic_number_upper_bound": mosaic_number_upper_bound(&c),
                "grid_diagram_dimension": grid_diagram_dimension(&c),
            });
            out(j, m.to_string().trim_end())
        }
        Command::Unlinkdist { code: c } => {
            let profile = unlink_profile(&code(c)?)?;
            let min = min_from_profile(&profile).ok();
            let max = max_from_profile(&profile).ok();
            let show = |x: Option<usize>| x.map_or("unknown".to_string(), |k| k.to_string());
            let text = format!("min {} max {}", show(min), show(max));
            out(json!({"min": min, "max": max, "profile": profile}), text)
        }
        Command::Render { code: c, out: path } => {
            let svg = render_svg(&code(c)?)?;
            match path {
                Some(path) => {
                    std::fs::write(path, &svg)
                        .map_err(Error::from)
                        .with_context(|| format!("writing {}", path.display()))?;
                    return Ok(None);
                }
                None => {
                    print!("{svg}");
                    return Ok(None);
                }
            }
        }
    }))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(Some(o)) => {
            if cli.text {
                println!("{}", o.text);
            } else {
                println!("{}", o.json);
            }
            ExitCode::SUCCESS
        }
        Ok(None) => ExitCode::SUCCESS,
        Err(e) => match e.downcast_ref::<Error>() {
            Some(err) => {
                eprintln!("error: {}: {e:#}", err.name());
                ExitCode::from(if err.is_parse_error() { 2 } else { 3 })
            }
            None => {
                eprintln!("error: {e:#}");
                ExitCode::from(3)
            }
        },
    }
}
