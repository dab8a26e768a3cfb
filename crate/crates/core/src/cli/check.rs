use std::fmt;

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::properties::{
    self, affine_transitivity, n_ec_check_with, pmnk_check_with, self_complementary_by_multiplier,
    srg_check, SearchOptions, Verdict, Witness,
};

/// One property named in `--props`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Prop {
    Regular,
    Complete,
    Connected,
    Srg,
    SelfComp,
    Symmetric,
    Ec(usize),
    Pmnk(usize, usize, usize),
}

impl fmt::Display for Prop {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Prop::Regular => f.write_str("regular"),
            Prop::Complete => f.write_str("complete"),
            Prop::Connected => f.write_str("connected"),
            Prop::Srg => f.write_str("srg"),
            Prop::SelfComp => f.write_str("selfcomp"),
            Prop::Symmetric => f.write_str("symmetric"),
            Prop::Ec(n) => write!(f, "ec:{n}"),
            Prop::Pmnk(m, n, k) => write!(f, "pmnk:{m},{n},{k}"),
        }
    }
}

fn bad_prop(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}

/// Parses `srg,ec:3,pmnk:1,1,1`. The two tokens after a `pmnk:` entry belong to it.
pub fn parse_props(list: &str) -> Result<Vec<Prop>> {
    let mut tokens = list.split(',').map(str::trim).filter(|t| !t.is_empty());
    let mut props = Vec::new();
    let number = |s: &str| -> Result<usize> {
        s.parse()
            .map_err(|_| bad_prop(format!("expected a number in property list, got '{s}'")))
    };
    while let Some(tok) = tokens.next() {
        let prop = match tok {
            "regular" => Prop::Regular,
            "complete" => Prop::Complete,
            "connected" => Prop::Connected,
            "srg" => Prop::Srg,
            "selfcomp" => Prop::SelfComp,
            "symmetric" => Prop::Symmetric,
            _ => {
                if let Some(n) = tok.strip_prefix("ec:") {
                    Prop::Ec(number(n)?)
                } else if let Some(m) = tok.strip_prefix("pmnk:") {
                    let m = number(m)?;
                    let n = number(tokens.next().ok_or_else(|| bad_prop("pmnk needs m,n,k"))?)?;
                    let k = number(tokens.next().ok_or_else(|| bad_prop("pmnk needs m,n,k"))?)?;
                    Prop::Pmnk(m, n, k)
                } else {
                    return Err(bad_prop(format!("unknown property '{tok}'")));
                }
            }
        };
        props.push(prop);
    }
    if props.is_empty() {
        return Err(bad_prop("no properties requested"));
    }
    Ok(props)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    pub value: Value,
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub graph: String,
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn render_table(&self) -> String {
        let mut out = format!("graph: {}\n", self.graph);
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            let verdict = if c.pass { "pass" } else { "FAIL" };
            let value = match &c.value {
                Value::Null => String::new(),
                v => v.to_string(),
            };
            out.push_str(format!("{:<width$}  {verdict}  {value}", c.name).trim_end());
            out.push('\n');
            if let Some(w) = &c.witness {
                out.push_str(&format!(
                    "{:<width$}  witness {}\n",
                    "",
                    serde_json::to_string(w).unwrap()
                ));
            }
        }
        out
    }
}

fn verdict_result(name: String, verdict: Verdict) -> CheckResult {
    let pass = verdict.holds();
    CheckResult {
        name,
        pass,
        value: Value::Null,
        witness: verdict.witness().cloned(),
    }
}

/// Runs every property against a Cayley graph.
pub fn run_checks(g: &Graph, props: &[Prop], opts: &SearchOptions) -> Result<Report> {
    let cayley = g
        .cayley()
        .ok_or_else(|| bad_prop("property checks need a Cayley graph"))?;
    // Validate caps up front so a bad request never produces a partial report.
    for prop in props {
        match *prop {
            Prop::Ec(n) if n > opts.ec_n_cap => {
                return Err(Error::CapExceeded {
                    what: "n",
                    value: n as u64,
                    cap: opts.ec_n_cap as u64,
                })
            }
            _ => {}
        }
    }
    let mut checks = Vec::with_capacity(props.len());
    for prop in props {
        let name = prop.to_string();
        let result = match *prop {
            Prop::Regular => match properties::is_regular(g) {
                Ok(k) => CheckResult { name, pass: true, value: json!(k), witness: None },
                Err(w) => CheckResult { name, pass: false, value: Value::Null, witness: Some(w) },
            },
            Prop::Complete => CheckResult {
                name,
                pass: properties::is_complete(g),
                value: json!({ "degree": properties::is_regular(g).ok() }),
                witness: None,
            },
            Prop::Connected => {
                let comps = properties::components(g).len();
                CheckResult {
                    name,
                    pass: comps <= 1,
                    value: json!({ "components": comps }),
                    witness: properties::is_connected(g).err(),
                }
            }
            Prop::Srg => match srg_check(g) {
                Ok(p) => CheckResult { name, pass: true, value: json!(p), witness: None },
                Err(w) => CheckResult { name, pass: false, value: Value::Null, witness: Some(w) },
            },
            Prop::SelfComp => {
                let r = self_complementary_by_multiplier(g, &cayley.field, &cayley.connection);
                CheckResult {
                    name,
                    pass: r.is_some(),
                    value: r.map_or(Value::Null, |r| json!({ "multiplier": cayley.field.format(r) })),
                    witness: None,
                }
            }
            Prop::Symmetric => match affine_transitivity(g, &cayley.field, &cayley.connection) {
                Ok(rep) => CheckResult {
                    name,
                    pass: rep.vertex_transitive && rep.edge_transitive,
                    value: json!(rep),
                    witness: None,
                },
                Err(w) => CheckResult { name, pass: false, value: Value::Null, witness: Some(w) },
            },
            Prop::Ec(n) => verdict_result(name, n_ec_check_with(g, n, opts)?),
            Prop::Pmnk(m, n, k) => verdict_result(name, pmnk_check_with(g, m, n, k, opts)?),
        };
        checks.push(result);
    }
    Ok(Report {
        graph: g.label().to_string(),
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prop_list_parsing() {
        assert_eq!(
            parse_props("srg,selfcomp,symmetric,ec:3").unwrap(),
            vec![Prop::Srg, Prop::SelfComp, Prop::Symmetric, Prop::Ec(3)]
        );
        assert_eq!(
            parse_props("pmnk:1,1,2,connected").unwrap(),
            vec![Prop::Pmnk(1, 1, 2), Prop::Connected]
        );
        assert!(parse_props("pmnk:1,1").is_err());
        assert!(parse_props("ec:x").is_err());
        assert!(parse_props("bogus").is_err());
        assert!(parse_props("").is_err());
        for p in parse_props("regular,complete,ec:2,pmnk:2,0,1").unwrap() {
            assert_eq!(parse_props(&p.to_string()).unwrap(), vec![p]);
        }
    }
}
