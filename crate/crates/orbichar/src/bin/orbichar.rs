//! Command-line front end: group specs in, exact invariants out.
//!
//! Exit codes: 0 success, 1 computation error, 2 usage error, 3 verification
//! failure.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;

use orbichar::burnside::{BurnsideClass, BurnsideRing};
use orbichar::cells::{self, ProperCellStructure};
use orbichar::census;
use orbichar::closed::{self, Constants};
use orbichar::coxeter::{self, Graph};
use orbichar::error::Error;
use orbichar::names;
use orbichar::rational::Rational;
use orbichar::report::{self, CharacterReport};
use orbichar::verify;

#[derive(Parser)]
#[command(
    name = "orbichar",
    version,
    about = "Exact Euler characteristics of classifying spaces of discrete groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy, Default)]
struct Format {
    /// Emit the result as JSON.
    #[arg(long, conflicts_with = "csv")]
    json: bool,
    /// Emit the result as CSV.
    #[arg(long)]
    csv: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Orbit census of commuting p-power-order tuples of a finite group.
    Census {
        /// Group spec, e.g. `S4`, `D8`, `C2xC2`, `perm:(0 1 2),(3 4)`.
        group: String,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: usize,
        /// Include a representative tuple per orbit.
        #[arg(long)]
        reps: bool,
        #[command(flatten)]
        format: Format,
    },
    /// Chromatic table of Euler characteristics for a target.
    Chi {
        #[command(subcommand)]
        target: ChiTarget,
    },
    /// Burnside class arithmetic, characters, and the loop/shift operators.
    Burnside {
        /// Class expression, e.g. `"D8 + D8 - C4"` or `"2*S3 - C2"`.
        expr: String,
        /// Apply the p-typical shift of this height first (needs --p).
        #[arg(long)]
        shift: Option<usize>,
        /// Apply the loop operator (after any shift).
        #[arg(long = "loop")]
        loop_op: bool,
        /// Prime for the shift and the chi_K(n) rows.
        #[arg(long)]
        p: Option<u64>,
        /// Heights for chi_K(n) rows, e.g. `1..3`.
        #[arg(long)]
        n: Option<String>,
        /// Count embedding classes of this group instead of the characters.
        #[arg(long)]
        phi: Option<String>,
        /// Print only the class serialization (round-trip JSON format).
        #[arg(long)]
        class_json: bool,
        #[command(flatten)]
        format: Format,
    },
    /// Clique profile and invariants of a right-angled Coxeter graph.
    Coxeter {
        /// Graph file: `.json` adjacency format or edge-list text.
        graph: String,
        #[command(flatten)]
        format: Format,
    },
    /// Inspect an equivariant cell structure (built-in or JSON file).
    Cells {
        /// `soule_sl3`, `sl2z_tree`, or a path to a cell-structure JSON file.
        structure: String,
        #[command(flatten)]
        format: Format,
    },
    /// Closed-form characteristics for arithmetic and mapping class groups.
    #[command(name = "closed-form")]
    ClosedForm {
        /// One of: sl2, gl, sl, sp, mapping-class, gl2-p3, crystallographic.
        family: String,
        #[arg(long)]
        p: Option<u64>,
        /// Heights, e.g. `1..3` (default `0..3`).
        #[arg(long)]
        n: Option<String>,
        /// Totally real field for sl2: `Q` or `Q(sqrt5)`.
        #[arg(long)]
        field: Option<String>,
        /// Number of order-p subgroup classes (crystallographic).
        #[arg(long)]
        r: Option<u64>,
        /// The order-p action on the lattice is free away from zero.
        #[arg(long)]
        free: bool,
        /// The order-p action has nonzero fixed vectors.
        #[arg(long)]
        with_fixed_points: bool,
        #[command(flatten)]
        format: Format,
    },
    /// Character decomposition report (summands and contributions).
    Report {
        /// One of: group, gl, sl, sp, mapping-class, coxeter,
        /// crystallographic, sl2.
        kind: String,
        /// Group spec (for `group`) or graph file (for `coxeter`).
        target: Option<String>,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long)]
        field: Option<String>,
        #[arg(long)]
        r: Option<u64>,
        #[command(flatten)]
        format: Format,
    },
    /// Run the full regression suite of published values.
    Verify {
        /// Only run checks whose tag contains this string.
        #[arg(long)]
        filter: Option<String>,
        #[command(flatten)]
        format: Format,
    },
}

// ---------------------------------------------------------------------------
// Rendering

struct Table {
    columns: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    fn new(columns: &[&str]) -> Table {
        Table {
            columns: columns.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    fn render(&self, format: Format, title: Option<&str>) -> String {
        if format.json {
            return self.render_json();
        }
        if format.csv {
            return self.render_csv();
        }
        self.render_text(title)
    }

    fn render_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(&serde_json::json!({
            "columns": self.columns,
            "rows": self.rows,
        }))
        .expect("serializable");
        out.push('\n');
        out
    }

    fn render_csv(&self) -> String {
        let escape = |field: &str| -> String {
            if field.contains([',', '"', '\n']) {
                format!("\"{}\"", field.replace('"', "\"\""))
            } else {
                field.to_string()
            }
        };
        let mut out = String::new();
        let header: Vec<String> = self.columns.iter().map(|c| escape(c)).collect();
        out.push_str(&header.join(","));
        out.push('\n');
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(|c| escape(c)).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    fn render_text(&self, title: Option<&str>) -> String {
        let mut widths: Vec<usize> = self.columns.iter().map(|c| c.len()).collect();
        for row in &self.rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.len());
            }
        }
        let mut out = String::new();
        if let Some(title) = title {
            let _ = writeln!(out, "{title}");
        }
        let line = |cells: &[String], widths: &[usize]| -> String {
            cells
                .iter()
                .zip(widths)
                .map(|(c, w)| format!("{c:<w$}"))
                .collect::<Vec<_>>()
                .join("  ")
                .trim_end()
                .to_string()
        };
        let _ = writeln!(out, "{}", line(&self.columns, &widths));
        let _ = writeln!(
            out,
            "{}",
            widths
                .iter()
                .map(|w| "-".repeat(*w))
                .collect::<Vec<_>>()
                .join("  ")
        );
        for row in &self.rows {
            let _ = writeln!(out, "{}", line(row, &widths));
        }
        out
    }
}

// ---------------------------------------------------------------------------
// Shared parsing helpers

/// Inclusive height range `a..b` or a single height `a`; `-1` allowed.
fn parse_height_range(text: &str) -> Result<(i64, i64), Error> {
    let bad = || Error::InvalidInput(format!("cannot parse height range `{text}`"));
    let (lo, hi) = match text.split_once("..") {
        Some((a, b)) => (
            a.trim().parse::<i64>().map_err(|_| bad())?,
            b.trim().parse::<i64>().map_err(|_| bad())?,
        ),
        None => {
            let k = text.trim().parse::<i64>().map_err(|_| bad())?;
            (k, k)
        }
    };
    if lo < -1 || hi < lo {
        return Err(bad());
    }
    Ok((lo, hi))
}

/// Burnside class expression: signed `k*SPEC` terms joined with `+`/`-`.
fn parse_class_expr(ring: &BurnsideRing, expr: &str) -> Result<BurnsideClass, Error> {
    let text = expr.replace('\u{2212}', "-");
    let mut out = BurnsideClass::zero();
    let mut term = String::new();
    let mut sign = 1i64;
    let mut terms: Vec<(i64, String)> = Vec::new();
    for ch in text.chars() {
        match ch {
            '+' | '-' => {
                if !term.trim().is_empty() {
                    terms.push((sign, term.trim().to_string()));
                }
                term = String::new();
                sign = if ch == '-' { -1 } else { 1 };
            }
            _ => term.push(ch),
        }
    }
    if !term.trim().is_empty() {
        terms.push((sign, term.trim().to_string()));
    }
    if terms.is_empty() {
        return Err(Error::InvalidInput(format!(
            "empty class expression `{expr}`"
        )));
    }
    for (sign, body) in terms {
        let (coefficient, spec) = match body.split_once('*') {
            Some((k, spec)) => (
                k.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::InvalidInput(format!("bad coefficient in `{body}`")))?,
                spec.trim(),
            ),
            None => (1, body.as_str()),
        };
        let group = names::parse_group(spec)?;
        out = &out + &ring.class_of(&group).scale(sign * coefficient);
    }
    Ok(out)
}

fn load_graph(path: &str) -> Result<Graph, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read `{path}`: {e}")))?;
    if path.ends_with(".json") {
        Graph::from_json(&text)
    } else {
        Graph::parse_edge_list(&text)
    }
}

fn load_cells(name: &str) -> Result<ProperCellStructure, Error> {
    match name {
        "soule_sl3" => Ok(cells::soule_sl3()),
        "sl2z_tree" => Ok(cells::sl2z_tree()),
        path => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::InvalidInput(format!("cannot read `{path}`: {e}")))?;
            ProperCellStructure::from_json(&text)
        }
    }
}

fn usage(msg: &str) -> Error {
    Error::InvalidInput(msg.to_string())
}

// ---------------------------------------------------------------------------
// Chromatic tables

#[derive(Subcommand)]
enum ChiTarget {
    /// A Burnside class expression over finite groups.
    Burnside {
        expr: String,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long, default_value = "1..3")]
        n: String,
        #[command(flatten)]
        format: Format,
    },
    /// An equivariant cell structure (built-in name or JSON file).
    Cells {
        structure: String,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long, default_value = "1..3")]
        n: String,
        #[command(flatten)]
        format: Format,
    },
    /// A right-angled Coxeter graph (prime fixed at 2).
    Coxeter {
        graph: String,
        #[arg(long, default_value = "1..3")]
        n: String,
        #[command(flatten)]
        format: Format,
    },
    /// A closed-form family (sl2, gl, sl, sp, mapping-class, gl2-p3,
    /// crystallographic).
    #[command(name = "closed-form")]
    ClosedForm {
        family: String,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long, default_value = "1..3")]
        n: String,
        #[arg(long)]
        field: Option<String>,
        #[arg(long)]
        r: Option<u64>,
        #[arg(long)]
        free: bool,
        #[arg(long)]
        with_fixed_points: bool,
        #[command(flatten)]
        format: Format,
    },
}

/// A target's row values along the chromatic sequence.
struct ChiRows {
    title: String,
    /// Height −1 value, when the target has an orbifold form.
    orbifold: Option<Rational>,
    chi_q: Rational,
    #[allow(clippy::type_complexity)]
    chi_kn: Box<dyn Fn(usize) -> Result<Rational, Error>>,
}

fn chi_table(rows: ChiRows, lo: i64, hi: i64, format: Format) -> Result<String, Error> {
    let mut table = Table::new(&["height", "chi"]);
    if lo == -1 && rows.orbifold.is_none() {
        return Err(Error::HeightUndefined {
            height: -1,
            target: rows.title,
        });
    }
    if let Some(orbifold) = &rows.orbifold {
        table.push(vec!["-1 (orbifold)".into(), orbifold.to_string()]);
    }
    table.push(vec!["0 (rational)".into(), rows.chi_q.to_string()]);
    for n in lo.max(1)..=hi {
        let value = (rows.chi_kn)(n as usize)?;
        table.push(vec![format!("{n}"), value.to_string()]);
    }
    Ok(table.render(format, Some(&rows.title)))
}

fn rational_of_bigint(value: BigInt) -> Rational {
    Rational::from_integer(value)
}

fn closed_form_rows(
    family: &str,
    p: Option<u64>,
    field: Option<String>,
    r: Option<u64>,
    free: bool,
    with_fixed_points: bool,
) -> Result<ChiRows, Error> {
    let constants = Constants::bundled();
    match family {
        "sl2" => {
            let field = field.ok_or_else(|| usage("sl2 needs --field (Q or Q(sqrt5))"))?;
            let p = p.ok_or_else(|| usage("sl2 needs --p"))?;
            let zeta = constants
                .zeta(&field)
                .ok_or_else(|| usage(&format!("no zeta entry for field `{field}`")))?
                .value
                .clone();
            let maximal = constants
                .sl2_maximal_data(&field, p)
                .ok_or_else(|| usage(&format!("no maximal subgroup data for `{field}`")))?;
            let chi_q = if p == 2 {
                closed::chi_sl2_ok_p2(0, &zeta, &maximal)?
            } else {
                closed::chi_sl2_ok(p, 0, &zeta, &maximal)?
            };
            let title = format!("SL2(O_{field}) at p={p}");
            Ok(ChiRows {
                title,
                orbifold: Some(zeta.clone()),
                chi_q,
                chi_kn: Box::new(move |n| {
                    if p == 2 {
                        closed::chi_sl2_ok_p2(n, &zeta, &maximal)
                    } else {
                        closed::chi_sl2_ok(p, n, &zeta, &maximal)
                    }
                }),
            })
        }
        "crystallographic" => {
            let p = p.ok_or_else(|| usage("crystallographic needs --p"))?;
            let r = r.ok_or_else(|| usage("crystallographic needs --r"))?;
            if free && with_fixed_points {
                return Err(usage("choose one of --free / --with-fixed-points"));
            }
            let is_free = free || !with_fixed_points;
            Ok(ChiRows {
                title: format!(
                    "Z^m x| C{p} ({})",
                    if is_free { "free" } else { "with fixed points" }
                ),
                orbifold: Some(closed::chi_crystallographic(p, -1, r, is_free, !is_free)?),
                chi_q: closed::chi_crystallographic(p, 0, r, is_free, !is_free)?,
                chi_kn: Box::new(move |n| {
                    closed::chi_crystallographic(p, n as i64, r, is_free, !is_free)
                }),
            })
        }
        "gl" => {
            let p = p.ok_or_else(|| usage("gl needs --p"))?;
            let chi_q = constants
                .chi_q_gl(p)
                .ok_or_else(|| usage(&format!("chi_Q(GL{}(Z)) is not recorded", p - 1)))?
                .value;
            let class_number = constants
                .class_number(p)
                .ok_or_else(|| usage(&format!("no class number recorded for p={p}")))?
                .value;
            let q = chi_q.clone();
            Ok(ChiRows {
                title: format!("GL{}(Z) at p={p}", p - 1),
                orbifold: None,
                chi_q,
                chi_kn: Box::new(move |n| {
                    closed::chi_gl_pminus1(p, n, &q, class_number).map(|t| t.chi_kn)
                }),
            })
        }
        "sl" => {
            let p = p.ok_or_else(|| usage("sl needs --p"))?;
            let chi_q = constants
                .chi_q_sl(p)
                .ok_or_else(|| usage(&format!("chi_Q(SL{}(Z)) is not recorded", p - 1)))?
                .value;
            let class_number = constants
                .class_number(p)
                .ok_or_else(|| usage(&format!("no class number recorded for p={p}")))?
                .value;
            let q = chi_q.clone();
            Ok(ChiRows {
                title: format!("SL{}(Z) at p={p}", p - 1),
                orbifold: None,
                chi_q,
                chi_kn: Box::new(move |n| {
                    closed::chi_sl_pminus1(p, n, &q, class_number).map(|t| t.chi_kn)
                }),
            })
        }
        "sp" => {
            let p = p.ok_or_else(|| usage("sp needs --p"))?;
            let label = format!("Sp{}(Z)", p - 1);
            let chi_q = constants
                .chi_q(&label)
                .and_then(|s| s.value.clone())
                .ok_or_else(|| usage(&format!("chi_Q({label}) is not recorded")))?;
            let h_minus = constants
                .h_minus(p)
                .ok_or_else(|| usage(&format!("no relative class number recorded for p={p}")))?
                .value;
            let q = chi_q.clone();
            Ok(ChiRows {
                title: format!("{label} at p={p}"),
                orbifold: None,
                chi_q,
                chi_kn: Box::new(move |n| closed::chi_sp_pminus1(p, n, &q, h_minus)),
            })
        }
        "mapping-class" => {
            let p = p.ok_or_else(|| usage("mapping-class needs --p"))?;
            let genus = (p - 1) / 2;
            let label = format!("Gamma{genus}");
            let chi_q = constants
                .chi_q(&label)
                .and_then(|s| s.value.clone())
                .ok_or_else(|| usage(&format!("chi_Q({label}) is not recorded")))?;
            let q = chi_q.clone();
            Ok(ChiRows {
                title: format!("Gamma_{genus} at p={p}"),
                orbifold: None,
                chi_q,
                chi_kn: Box::new(move |n| closed::chi_mapping_class(p, n, &q)),
            })
        }
        "gl2-p3" => {
            if let Some(p) = p {
                if p != 3 {
                    return Err(usage("gl2-p3 is the p = 3 special case"));
                }
            }
            Ok(ChiRows {
                title: "GL2(Z) at p=3".into(),
                orbifold: None,
                chi_q: closed::chi_gl2_at_3(0),
                chi_kn: Box::new(|n| Ok(closed::chi_gl2_at_3(n))),
            })
        }
        other => Err(usage(&format!("unknown closed-form family `{other}`"))),
    }
}

fn run_chi(target: ChiTarget) -> Result<String, Error> {
    match target {
        ChiTarget::Burnside { expr, p, n, format } => {
            let (lo, hi) = parse_height_range(&n)?;
            let ring = BurnsideRing::new();
            let class = parse_class_expr(&ring, &expr)?;
            if hi >= 1 && p.is_none() {
                return Err(usage("heights >= 1 need --p"));
            }
            let chi_q = Rational::from_integer(BigInt::from(ring.chi_q(&class)));
            let title = format!("class {}", ring.describe(&class));
            let rows = ChiRows {
                title,
                orbifold: Some(ring.chi_orb(&class)),
                chi_q,
                chi_kn: Box::new(move |height| {
                    ring.chi_kn(&class, p.expect("checked above"), height)
                        .map(rational_of_bigint)
                }),
            };
            chi_table(rows, lo, hi, format)
        }
        ChiTarget::Cells {
            structure,
            p,
            n,
            format,
        } => {
            let (lo, hi) = parse_height_range(&n)?;
            let structure = load_cells(&structure)?;
            if hi >= 1 && p.is_none() {
                return Err(usage("heights >= 1 need --p"));
            }
            let title = structure.label.clone();
            let chi_q = Rational::from_integer(BigInt::from(structure.chi_q()));
            let orbifold = structure.chi_orb();
            let rows = ChiRows {
                title,
                orbifold: Some(orbifold),
                chi_q,
                chi_kn: Box::new(move |height| {
                    structure
                        .chi_kn(p.expect("checked above"), height)
                        .map(rational_of_bigint)
                }),
            };
            chi_table(rows, lo, hi, format)
        }
        ChiTarget::Coxeter { graph, n, format } => {
            let (lo, hi) = parse_height_range(&n)?;
            let graph = load_graph(&graph)?;
            let profile = coxeter::clique_census(&graph);
            let title = format!(
                "W(L) with {} vertices, {} edges (p = 2)",
                graph.vertex_count(),
                graph.edge_count()
            );
            let rows = ChiRows {
                title,
                orbifold: Some(coxeter::chi_orb_from_profile(&profile)),
                chi_q: Rational::from_integer(BigInt::from(1)),
                chi_kn: Box::new(move |height| {
                    Ok(rational_of_bigint(coxeter::chi_kn_from_profile(
                        &profile, height,
                    )))
                }),
            };
            chi_table(rows, lo, hi, format)
        }
        ChiTarget::ClosedForm {
            family,
            p,
            n,
            field,
            r,
            free,
            with_fixed_points,
            format,
        } => {
            let (lo, hi) = parse_height_range(&n)?;
            let rows = closed_form_rows(&family, p, field, r, free, with_fixed_points)?;
            chi_table(rows, lo, hi, format)
        }
    }
}

// ---------------------------------------------------------------------------
// Other subcommands

fn run_census(group: &str, p: u64, n: usize, reps: bool, format: Format) -> Result<String, Error> {
    let g = names::parse_group(group)?;
    let census = census::census_naive(&g, p, n)?;
    let mut columns = vec!["orbit", "size", "centralizer order"];
    if reps {
        columns.push("representative");
    }
    let mut table = Table::new(&columns);
    for (i, orbit) in census.orbits.iter().enumerate() {
        let mut row = vec![
            i.to_string(),
            orbit.size.to_string(),
            orbit.centralizer.order().to_string(),
        ];
        if reps {
            let tuple: Vec<String> = orbit.rep.iter().map(|p| p.to_string()).collect();
            row.push(format!("({})", tuple.join(", ")));
        }
        table.push(row);
    }
    let title = format!(
        "{} orbits of commuting {n}-tuples of {p}-power-order elements in {} ({} tuples)",
        census.orbit_count(),
        g.display_name(),
        census.total_tuples,
    );
    Ok(table.render(format, Some(&title)))
}

#[allow(clippy::too_many_arguments)]
fn run_burnside(
    expr: &str,
    shift: Option<usize>,
    loop_op: bool,
    p: Option<u64>,
    n: Option<String>,
    phi: Option<String>,
    class_json: bool,
    format: Format,
) -> Result<String, Error> {
    let ring = BurnsideRing::new();
    let mut class = parse_class_expr(&ring, expr)?;
    if let Some(height) = shift {
        let p = p.ok_or_else(|| usage("--shift needs --p"))?;
        class = ring.p_shift(&class, p, height)?;
    }
    if loop_op {
        class = ring.loop_op(&class);
    }
    if class_json {
        let mut text = ring.to_json(&class);
        text.push('\n');
        return Ok(text);
    }
    let mut table = Table::new(&["quantity", "value"]);
    table.push(vec!["class".into(), ring.describe(&class)]);
    if let Some(spec) = phi {
        let probe = names::parse_group(&spec)?;
        table.push(vec![
            format!("phi_{spec}"),
            ring.phi_k(&class, &probe).to_string(),
        ]);
    }
    table.push(vec!["chi_orb".into(), ring.chi_orb(&class).to_string()]);
    table.push(vec!["chi_Q".into(), ring.chi_q(&class).to_string()]);
    if let Some(range) = n {
        let (lo, hi) = parse_height_range(&range)?;
        let p = p.ok_or_else(|| usage("chi_K(n) rows need --p"))?;
        for height in lo.max(1)..=hi {
            table.push(vec![
                format!("chi_K({height}) at p={p}"),
                ring.chi_kn(&class, p, height as usize)?.to_string(),
            ]);
        }
    }
    Ok(table.render(format, None))
}

fn run_coxeter(path: &str, format: Format) -> Result<String, Error> {
    let graph = load_graph(path)?;
    let profile = coxeter::clique_census(&graph);
    let mut table = Table::new(&["quantity", "value"]);
    table.push(vec!["vertices".into(), graph.vertex_count().to_string()]);
    table.push(vec!["edges".into(), graph.edge_count().to_string()]);
    for (l, count) in profile.counts().iter().enumerate() {
        table.push(vec![format!("s({l})"), count.to_string()]);
    }
    table.push(vec![
        "chi_orb".into(),
        coxeter::chi_orb_from_profile(&profile).to_string(),
    ]);
    Ok(table.render(format, Some("right-angled Coxeter group")))
}

fn run_cells(name: &str, format: Format) -> Result<String, Error> {
    let structure = load_cells(name)?;
    if format.json {
        let mut text = structure.to_json();
        text.push('\n');
        return Ok(text);
    }
    let mut table = Table::new(&["dim", "stabilizer", "order", "multiplicity"]);
    for cell in &structure.cells {
        table.push(vec![
            cell.dim.to_string(),
            cell.stabilizer.display_name(),
            cell.stabilizer.order().to_string(),
            cell.multiplicity.to_string(),
        ]);
    }
    let title = format!(
        "{} ({} equivariant cells, chi_Q = {}, chi_orb = {})",
        structure.label,
        structure
            .cells
            .iter()
            .map(|c| c.multiplicity as u64)
            .sum::<u64>(),
        structure.chi_q(),
        structure.chi_orb(),
    );
    Ok(table.render(format, Some(&title)))
}

#[allow(clippy::too_many_arguments)]
fn run_closed_form(
    family: &str,
    p: Option<u64>,
    n: Option<String>,
    field: Option<String>,
    r: Option<u64>,
    free: bool,
    with_fixed_points: bool,
    format: Format,
) -> Result<String, Error> {
    let range = n.unwrap_or_else(|| "0..3".into());
    let (lo, hi) = parse_height_range(&range)?;
    let constants = Constants::bundled();
    let mut table = Table::new(&["quantity", "value", "source"]);

    // Input provenance rows.
    match family {
        "sl2" => {
            let field_name = field.clone().ok_or_else(|| usage("sl2 needs --field"))?;
            let zeta = constants
                .zeta(&field_name)
                .ok_or_else(|| usage(&format!("no zeta entry for `{field_name}`")))?;
            table.push(vec![
                format!("zeta_{field_name}(-1)"),
                zeta.value.to_string(),
                zeta.source.clone(),
            ]);
            if let Some(maximal) = constants.sl2_maximal(&field_name) {
                let classes: Vec<String> = maximal
                    .value
                    .iter()
                    .map(|(order, count)| format!("{count} x C{order}"))
                    .collect();
                table.push(vec![
                    "maximal finite subgroups".into(),
                    classes.join(", "),
                    maximal.source.clone(),
                ]);
            }
        }
        "gl" | "sl" => {
            let p = p.ok_or_else(|| usage("needs --p"))?;
            let entry = if family == "gl" {
                constants.chi_q_gl(p)
            } else {
                constants.chi_q_sl(p)
            };
            if let Some(entry) = entry {
                table.push(vec![
                    format!("chi_Q({}{}(Z))", family.to_uppercase(), p - 1),
                    entry.value.to_string(),
                    entry.source,
                ]);
            }
            if let Some(h) = constants.class_number(p) {
                table.push(vec![
                    format!("|Cl(Q(zeta_{p}))|"),
                    h.value.to_string(),
                    h.source.clone(),
                ]);
            }
        }
        "sp" => {
            let p = p.ok_or_else(|| usage("needs --p"))?;
            if let Some(entry) = constants.chi_q(&format!("Sp{}(Z)", p - 1)) {
                table.push(vec![
                    format!("chi_Q(Sp{}(Z))", p - 1),
                    entry
                        .value
                        .as_ref()
                        .map(|v| v.to_string())
                        .unwrap_or_else(|| "unavailable".into()),
                    entry.source.clone(),
                ]);
            }
            if let Some(h) = constants.h_minus(p) {
                table.push(vec![
                    format!("h_{p}^-"),
                    h.value.to_string(),
                    h.source.clone(),
                ]);
            }
        }
        "mapping-class" => {
            let p = p.ok_or_else(|| usage("needs --p"))?;
            if let Some(entry) = constants.chi_q(&format!("Gamma{}", (p - 1) / 2)) {
                table.push(vec![
                    format!("chi_Q(Gamma_{})", (p - 1) / 2),
                    entry
                        .value
                        .as_ref()
                        .map(|v| v.to_string())
                        .unwrap_or_else(|| "unavailable".into()),
                    entry.source.clone(),
                ]);
            }
        }
        _ => {}
    }

    let rows = closed_form_rows(family, p, field, r, free, with_fixed_points)?;
    if lo == -1 && rows.orbifold.is_none() {
        return Err(Error::HeightUndefined {
            height: -1,
            target: rows.title,
        });
    }
    if let Some(orbifold) = &rows.orbifold {
        table.push(vec![
            "chi at height -1 (orbifold)".into(),
            orbifold.to_string(),
            String::new(),
        ]);
    }
    table.push(vec![
        "chi at height 0 (rational)".into(),
        rows.chi_q.to_string(),
        String::new(),
    ]);
    for height in lo.max(1)..=hi {
        table.push(vec![
            format!("chi at height {height}"),
            (rows.chi_kn)(height as usize)?.to_string(),
            String::new(),
        ]);
    }
    Ok(table.render(format, Some(&rows.title)))
}

fn run_report(
    kind: &str,
    target: Option<String>,
    p: Option<u64>,
    n: usize,
    field: Option<String>,
    r: Option<u64>,
    format: Format,
) -> Result<String, Error> {
    let constants = Constants::bundled();
    let report: CharacterReport = match kind {
        "group" => {
            let spec = target.ok_or_else(|| usage("report group needs a group spec"))?;
            let p = p.ok_or_else(|| usage("report group needs --p"))?;
            let g = names::parse_group(&spec)?;
            report::report_finite(&g, p, n)?
        }
        "gl" | "sl" => {
            let p = p.ok_or_else(|| usage("needs --p"))?;
            let class_number = constants
                .class_number(p)
                .ok_or_else(|| usage(&format!("no class number recorded for p={p}")))?
                .value;
            if kind == "gl" {
                report::report_gl(p, n, class_number)?
            } else {
                report::report_sl(p, n, class_number)?
            }
        }
        "sp" => {
            let p = p.ok_or_else(|| usage("needs --p"))?;
            let h_minus = constants
                .h_minus(p)
                .ok_or_else(|| usage(&format!("no relative class number recorded for p={p}")))?
                .value;
            report::report_sp(p, n, h_minus)?
        }
        "mapping-class" => {
            let p = p.ok_or_else(|| usage("needs --p"))?;
            report::report_mapping_class(p, n)?
        }
        "coxeter" => {
            let path = target.ok_or_else(|| usage("report coxeter needs a graph file"))?;
            report::report_coxeter(&load_graph(&path)?, n)
        }
        "crystallographic" => {
            let p = p.ok_or_else(|| usage("needs --p"))?;
            let r = r.ok_or_else(|| usage("needs --r"))?;
            report::report_crystallographic(p, n, r)?
        }
        "sl2" => {
            let field = field.ok_or_else(|| usage("sl2 needs --field"))?;
            let p = p.ok_or_else(|| usage("needs --p"))?;
            let maximal = constants
                .sl2_maximal_data(&field, p)
                .ok_or_else(|| usage(&format!("no maximal subgroup data for `{field}`")))?;
            report::report_sl2_ok(&field, p, n, &maximal)?
        }
        other => return Err(usage(&format!("unknown report kind `{other}`"))),
    };

    let mut table = Table::new(&["count", "centralizer", "contribution"]);
    for summand in &report.summands {
        table.push(vec![
            summand.count.to_string(),
            summand.centralizer.clone(),
            summand.contribution.describe(),
        ]);
    }
    let (even, odd, unresolved) = report.known_free_rank();
    let mut title = format!(
        "{} at p={}, height {}: {} summands",
        report.target,
        report.prime,
        report.height,
        report.summand_count()
    );
    let _ = write!(
        title,
        "; known free part: even rank {even}, odd rank {odd}{}",
        if unresolved {
            " (plus the ambient group cohomology)"
        } else {
            ""
        }
    );
    Ok(table.render(format, Some(&title)))
}

fn run_verify(filter: Option<&str>, format: Format) -> (String, bool) {
    let checks = verify::run(filter);
    let all_passed = checks.iter().all(|c| c.passed);
    if format.json || format.csv {
        let mut table = Table::new(&[
            "criterion",
            "tag",
            "name",
            "passed",
            "expected",
            "got",
            "note",
        ]);
        for check in &checks {
            table.push(vec![
                check.criterion.to_string(),
                check.tag.to_string(),
                check.name.clone(),
                check.passed.to_string(),
                check.expected.clone(),
                check.got.clone(),
                check.note.clone(),
            ]);
        }
        return (table.render(format, None), all_passed && !checks.is_empty());
    }
    let mut out = String::new();
    for check in &checks {
        if check.passed {
            let _ = writeln!(
                out,
                "[ pass ] ({}) {}: {} -- {}",
                check.tag, check.name, check.got, check.note
            );
        } else {
            let _ = writeln!(
                out,
                "[ FAIL ] ({}) {}: expected {}, got {} -- {}",
                check.tag, check.name, check.expected, check.got, check.note
            );
        }
    }
    let failed = checks.iter().filter(|c| !c.passed).count();
    let _ = writeln!(
        out,
        "{} checks, {} failed{}",
        checks.len(),
        failed,
        if checks.is_empty() {
            " (empty filter?)"
        } else {
            ""
        }
    );
    (out, all_passed && !checks.is_empty())
}

fn exit_code_for(error: &Error) -> u8 {
    match error {
        Error::UnknownSpec(_) | Error::InvalidInput(_) | Error::NotPrime(_) => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome: Result<(String, u8), Error> = match cli.command {
        Command::Census {
            group,
            p,
            n,
            reps,
            format,
        } => run_census(&group, p, n, reps, format).map(|s| (s, 0)),
        Command::Chi { target } => run_chi(target).map(|s| (s, 0)),
        Command::Burnside {
            expr,
            shift,
            loop_op,
            p,
            n,
            phi,
            class_json,
            format,
        } => run_burnside(&expr, shift, loop_op, p, n, phi, class_json, format).map(|s| (s, 0)),
        Command::Coxeter { graph, format } => run_coxeter(&graph, format).map(|s| (s, 0)),
        Command::Cells { structure, format } => run_cells(&structure, format).map(|s| (s, 0)),
        Command::ClosedForm {
            family,
            p,
            n,
            field,
            r,
            free,
            with_fixed_points,
            format,
        } => run_closed_form(
            family.as_str(),
            p,
            n,
            field,
            r,
            free,
            with_fixed_points,
            format,
        )
        .map(|s| (s, 0)),
        Command::Report {
            kind,
            target,
            p,
            n,
            field,
            r,
            format,
        } => run_report(&kind, target, p, n, field, r, format).map(|s| (s, 0)),
        Command::Verify { filter, format } => {
            let (text, passed) = run_verify(filter.as_deref(), format);
            Ok((text, if passed { 0 } else { 3 }))
        }
    };
    match outcome {
        Ok((text, code)) => {
            print!("{text}");
            ExitCode::from(code)
        }
        Err(error) => {
            eprintln!("error: {error}");
            ExitCode::from(exit_code_for(&error))
        }
    }
}
