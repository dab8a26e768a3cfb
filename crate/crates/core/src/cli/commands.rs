use std::io::Write;

use serde::Serialize;
use serde_json::json;

use super::check::{parse_props, run_checks};
use super::{Command, Config, FamilyName, OutputFormat, EXIT_FAIL, EXIT_PASS};
use crate::arith;
use crate::error::{Error, Result};
use crate::field::{Field, PrimePoly};
use crate::graph::{build_family, export, Family, FamilySpec, Format, Graph};
use crate::properties::{self, SearchOptions};

fn io(e: std::io::Error) -> Error {
    Error::Precondition(format!("i/o error: {e}"))
}

pub(super) fn dispatch(cmd: &Command, config: &Config, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Field { p, n, poly, tables } => field(*p, *n, poly.as_deref(), *tables, config, out),
        Command::Graph { family, params } => graph(*family, params, config, out),
        Command::Check {
            family,
            params,
            props,
        } => check(*family, params, props, config, out),
        Command::Survey {
            family,
            q_range,
            m_range,
        } => survey(family, q_range, m_range, config, out),
    }
}

/// Sends text to `--file` when given, otherwise to `out`.
fn emit(text: &str, config: &Config, out: &mut dyn Write) -> Result<()> {
    match &config.file {
        Some(path) => std::fs::write(path, text).map_err(io),
        None => out.write_all(text.as_bytes()).map_err(io),
    }
}

#[derive(Serialize)]
struct FieldReport {
    p: u32,
    n: u32,
    q: u32,
    modulus: String,
    modulus_coeffs: Vec<u32>,
    primitive_element: String,
    elements: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    power_table: Option<Vec<String>>,
}

fn field(p: u64, n: u32, poly: Option<&str>, tables: bool, config: &Config, out: &mut dyn Write) -> Result<i32> {
    if !arith::is_prime(p) {
        return Err(Error::NonPrime(p));
    }
    let q = p.checked_pow(n).unwrap_or(u64::MAX);
    config.check_q(q)?;
    let p32 = p as u32;
    let modulus = poly.map(|text| PrimePoly::parse(text, p32)).transpose()?;
    let f = Field::new(p32, n, modulus)?;
    let table = (tables && f.q() > 2).then(|| f.power_table());
    let report = FieldReport {
        p: f.p(),
        n: f.n(),
        q: f.q(),
        modulus: f.modulus().to_string(),
        modulus_coeffs: f.modulus().coeffs().to_vec(),
        primitive_element: f.format(f.primitive_element()),
        elements: f.elements().map(|x| f.format(x)).collect(),
        power_table: table.as_ref().map(|t| t.render(&f)),
    };
    let text = if config.wants_json() {
        serde_json::to_string_pretty(&report).unwrap() + "\n"
    } else {
        let mut s = format!(
            "field: GF({}^{}) = Z_{}[x]/({})\nq = {}\nprimitive element: {}\nelements:\n",
            f.p(),
            f.n(),
            f.p(),
            report.modulus,
            f.q(),
            report.primitive_element
        );
        s.push_str(&report.elements.join("\n"));
        s.push('\n');
        if let Some(rows) = &report.power_table {
            s.push_str("powers:\n");
            for row in rows {
                s.push_str(row);
                s.push('\n');
            }
        }
        s
    };
    emit(&text, config, out)?;
    Ok(EXIT_PASS)
}

/// Maps CLI family names and positional parameters to a [`FamilySpec`].
pub(crate) fn family_spec(name: FamilyName, params: &[u64], config: &Config) -> Result<FamilySpec> {
    let arity = match name {
        FamilyName::Gpaley | FamilyName::Mpaley => 2,
        _ => 1,
    };
    if params.len() != arity {
        return Err(Error::Precondition(format!(
            "{name:?} takes {arity} parameter(s), got {}",
            params.len()
        )));
    }
    let q = params[0];
    config.check_q(q)?;
    let field = Field::with_order(q)?;
    let family = match name {
        FamilyName::Paley => Family::Paley,
        FamilyName::Cubic => Family::CubicPaley,
        FamilyName::Quadruple => Family::QuadruplePaley,
        FamilyName::Gpaley => Family::GeneralizedPaley { k: params[1] },
        FamilyName::Mpaley => Family::MPaley { m: params[1] },
        FamilyName::Pstar => Family::PStar,
    };
    Ok(FamilySpec::new(family, field))
}

fn adjacency_table(g: &Graph) -> String {
    let mut s = String::new();
    for u in 0..g.order() {
        let nbrs: Vec<String> = g.neighbors(u).iter().map(|v| g.vertex_name(v)).collect();
        s.push_str(&format!("{}: {}\n", g.vertex_name(u), nbrs.join(" ")));
    }
    s
}

fn graph(name: FamilyName, params: &[u64], config: &Config, out: &mut dyn Write) -> Result<i32> {
    let g = build_family(&family_spec(name, params, config)?)?;
    let format = if config.json {
        OutputFormat::Json
    } else {
        config.output_format.unwrap_or(OutputFormat::Edges)
    };
    let mut text = match format {
        OutputFormat::Dot => export(&g, Format::Dot),
        OutputFormat::Edges => export(&g, Format::Edges),
        OutputFormat::Json => export(&g, Format::Json),
        OutputFormat::Table => adjacency_table(&g),
    };
    if !text.is_empty() && !text.ends_with('\n') {
        text.push('\n');
    }
    emit(&text, config, out)?;
    Ok(EXIT_PASS)
}

fn check(name: FamilyName, params: &[u64], props: &str, config: &Config, out: &mut dyn Write) -> Result<i32> {
    let props = parse_props(props)?;
    let g = build_family(&family_spec(name, params, config)?)?;
    let opts = SearchOptions {
        jobs: config.jobs,
        ec_n_cap: config.ec_n_cap,
    };
    let report = run_checks(&g, &props, &opts)?;
    let text = if config.wants_json() {
        serde_json::to_string_pretty(&report).unwrap() + "\n"
    } else {
        report.render_table()
    };
    emit(&text, config, out)?;
    Ok(if report.all_pass() { EXIT_PASS } else { EXIT_FAIL })
}

fn parse_range(text: &str, what: &str) -> Result<(u64, u64)> {
    let bad = || Error::Precondition(format!("bad {what} range '{text}', expected A..B"));
    let (lo, hi) = match text.split_once("..") {
        Some((a, b)) => (a.trim(), b.trim().trim_start_matches('=')),
        None => (text.trim(), text.trim()),
    };
    let lo: u64 = lo.parse().map_err(|_| bad())?;
    let hi: u64 = hi.parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

/// One row of the m-Paley survey.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurveyRow {
    pub q: u64,
    pub m: u64,
    pub d: u64,
    pub degree: usize,
    pub complete: bool,
    pub connected: bool,
    pub components: usize,
}

/// Rows for odd prime powers `q` and odd `m ≥ 3` within the inclusive ranges.
pub fn survey_rows(q_range: (u64, u64), m_range: (u64, u64)) -> Result<Vec<SurveyRow>> {
    let mut rows = Vec::new();
    for (q, p, _) in arith::prime_powers_in(q_range.0, q_range.1) {
        if p == 2 {
            continue;
        }
        let field = Field::with_order(q)?;
        for m in (m_range.0.max(3)..=m_range.1).filter(|m| m % 2 == 1) {
            let g = build_family(&FamilySpec::new(Family::MPaley { m }, field.clone()))?;
            let components = properties::components(&g).len();
            rows.push(SurveyRow {
                q,
                m,
                d: arith::gcd(m, q - 1),
                degree: g.degree(0),
                complete: properties::is_complete(&g),
                connected: components == 1,
                components,
            });
        }
    }
    Ok(rows)
}

fn survey(family: &str, q_range: &str, m_range: &str, config: &Config, out: &mut dyn Write) -> Result<i32> {
    if family != "mpaley" {
        return Err(Error::Precondition(format!(
            "survey supports only the mpaley family, got '{family}'"
        )));
    }
    let q_range = parse_range(q_range, "q")?;
    let m_range = parse_range(m_range, "m")?;
    config.check_q(q_range.1)?;
    let rows = survey_rows(q_range, m_range)?;
    let text = if config.wants_json() {
        serde_json::to_string_pretty(&json!({ "family": "mpaley", "rows": rows })).unwrap() + "\n"
    } else {
        let mut s = format!(
            "{:>6} {:>4} {:>4} {:>7} {:>9} {:>10} {:>11}\n",
            "q", "m", "d", "degree", "complete", "connected", "components"
        );
        for r in &rows {
            s.push_str(&format!(
                "{:>6} {:>4} {:>4} {:>7} {:>9} {:>10} {:>11}\n",
                r.q, r.m, r.d, r.degree, r.complete, r.connected, r.components
            ));
        }
        s
    };
    emit(&text, config, out)?;
    Ok(EXIT_PASS)
}
