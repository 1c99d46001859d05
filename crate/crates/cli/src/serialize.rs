//! Output encodings for polynomials, triangles and check reports.
//!
//! Polynomial JSON has the shape
//! `{"vars":["q","t"],"terms":[{"q":a,"t":b,"coeff":"<decimal>"},...]}`
//! with terms sorted by decreasing `q` exponent, then decreasing `t`
//! exponent. Coefficients are decimal strings so consumers with 53-bit
//! numbers do not lose precision. CSV uses the header `q_exp,t_exp,coeff`
//! and the same order.

use clap::ValueEnum;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;
use treepark_core::{BivariatePolynomial, CheckReport, MonomialDifference, SubCheck};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Error)]
pub enum DecodeError {
    #[error("invalid JSON polynomial: {0}")]
    Json(#[from] serde_json::Error),
    #[error("expected vars [\"q\",\"t\"], found {0:?}")]
    Vars(Vec<String>),
    #[error("coefficient {0:?} is not a decimal integer")]
    Coeff(String),
    #[error(transparent)]
    Text(#[from] treepark_core::bipoly::ParsePolynomialError),
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    vars: Vec<String>,
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    q: usize,
    t: usize,
    coeff: String,
}

/// Nonzero terms in serialization order: `q` descending, then `t` descending.
fn ordered_terms(p: &BivariatePolynomial) -> Vec<(usize, usize, &BigInt)> {
    let mut terms: Vec<_> = p.terms().collect();
    terms.sort_by_key(|&(q, t, _)| std::cmp::Reverse((q, t)));
    terms
}

fn poly_json(p: &BivariatePolynomial) -> PolyJson {
    PolyJson {
        vars: vec!["q".into(), "t".into()],
        terms: ordered_terms(p)
            .into_iter()
            .map(|(q, t, c)| TermJson {
                q,
                t,
                coeff: c.to_string(),
            })
            .collect(),
    }
}

pub fn polynomial_json_value(p: &BivariatePolynomial) -> Value {
    serde_json::to_value(poly_json(p)).expect("plain data serializes")
}

pub fn polynomial_to_json(p: &BivariatePolynomial) -> String {
    serde_json::to_string(&poly_json(p)).expect("plain data serializes")
}

pub fn polynomial_from_json(s: &str) -> Result<BivariatePolynomial, DecodeError> {
    let parsed: PolyJson = serde_json::from_str(s)?;
    if parsed.vars != ["q", "t"] {
        return Err(DecodeError::Vars(parsed.vars));
    }
    let terms = parsed
        .terms
        .into_iter()
        .map(|t| {
            t.coeff
                .parse::<BigInt>()
                .map(|c| (t.q, t.t, c))
                .map_err(|_| DecodeError::Coeff(t.coeff))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(BivariatePolynomial::from_terms(terms))
}

/// Accepts either the JSON shape or the text form.
pub fn polynomial_from_str(s: &str) -> Result<BivariatePolynomial, DecodeError> {
    if s.trim_start().starts_with('{') {
        polynomial_from_json(s)
    } else {
        Ok(s.trim().parse()?)
    }
}

pub fn serialize_polynomial(p: &BivariatePolynomial, format: Format) -> Vec<u8> {
    match format {
        Format::Json => {
            let mut s = polynomial_to_json(p);
            s.push('\n');
            s.into_bytes()
        }
        Format::Csv => csv_bytes(
            &["q_exp", "t_exp", "coeff"],
            ordered_terms(p)
                .into_iter()
                .map(|(q, t, c)| vec![q.to_string(), t.to_string(), c.to_string()]),
        ),
        Format::Text => format!("{p}\n").into_bytes(),
    }
}

/// RFC 4180 CSV with a header row.
pub fn csv_bytes<I>(header: &[&str], rows: I) -> Vec<u8>
where
    I: IntoIterator<Item = Vec<String>>,
{
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::CRLF)
        .from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    w.into_inner().expect("in-memory flush")
}

fn witness_json(w: &Option<MonomialDifference>) -> Value {
    match w {
        None => Value::Null,
        Some(w) => json!({
            "q_exp": w.q_exp,
            "t_exp": w.t_exp,
            "lhs": w.lhs.to_string(),
            "rhs": w.rhs.to_string(),
        }),
    }
}

fn subcheck_json(s: &SubCheck) -> Value {
    json!({
        "name": s.name,
        "verdict": s.verdict.as_str(),
        "witness": witness_json(&s.witness),
        "note": s.note,
    })
}

pub fn report_json_value(r: &CheckReport, timings: bool) -> Value {
    let mut v = json!({
        "claim_id": r.claim_id,
        "n": r.n,
        "verdict": r.verdict.as_str(),
        "witness": witness_json(&r.witness),
        "object_count": r.object_count,
        "subchecks": r.subchecks.iter().map(subcheck_json).collect::<Vec<_>>(),
    });
    if timings {
        v["elapsed_ms"] = json!(r.elapsed.as_secs_f64() * 1e3);
    }
    v
}

/// Reports in the requested format. Elapsed time is only written when
/// `timings` is set, which keeps default output reproducible byte for byte.
pub fn serialize_reports(reports: &[CheckReport], format: Format, timings: bool) -> Vec<u8> {
    match format {
        Format::Json => {
            let arr: Vec<Value> = reports.iter().map(|r| report_json_value(r, timings)).collect();
            let mut s = serde_json::to_string_pretty(&arr).expect("plain data serializes");
            s.push('\n');
            s.into_bytes()
        }
        Format::Csv => {
            let mut header = vec![
                "claim_id", "n", "verdict", "q_exp", "t_exp", "lhs", "rhs", "object_count",
            ];
            if timings {
                header.push("elapsed_ms");
            }
            csv_bytes(
                &header,
                reports.iter().map(|r| {
                    let (q, t, l, rh) = match &r.witness {
                        Some(w) => (
                            w.q_exp.to_string(),
                            w.t_exp.to_string(),
                            w.lhs.to_string(),
                            w.rhs.to_string(),
                        ),
                        None => Default::default(),
                    };
                    let mut row = vec![
                        r.claim_id.clone(),
                        r.n.to_string(),
                        r.verdict.as_str().to_string(),
                        q,
                        t,
                        l,
                        rh,
                        r.object_count.to_string(),
                    ];
                    if timings {
                        row.push(format!("{:.3}", r.elapsed.as_secs_f64() * 1e3));
                    }
                    row
                }),
            )
        }
        Format::Text => {
            let mut out = String::new();
            for r in reports {
                out.push_str(&format!(
                    "{:<8}{} n={} objects={}",
                    r.verdict.as_str(),
                    r.claim_id,
                    r.n,
                    r.object_count
                ));
                if timings {
                    out.push_str(&format!(" elapsed={:.3}s", r.elapsed.as_secs_f64()));
                }
                out.push('\n');
                for s in &r.subchecks {
                    out.push_str(&format!("    {}: {}", s.name, s.verdict.as_str()));
                    if let Some(w) = &s.witness {
                        out.push_str(&format!(
                            " (first difference at q^{} t^{}: {} vs {})",
                            w.q_exp, w.t_exp, w.lhs, w.rhs
                        ));
                    }
                    if let Some(note) = &s.note {
                        out.push_str(&format!(" [{note}]"));
                    }
                    out.push('\n');
                }
            }
            out.into_bytes()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> BivariatePolynomial {
        s.parse().unwrap()
    }

    #[test]
    fn zero_polynomial_json() {
        assert_eq!(
            polynomial_to_json(&BivariatePolynomial::zero()),
            r#"{"vars":["q","t"],"terms":[]}"#
        );
    }

    #[test]
    fn small_json_examples() {
        assert_eq!(
            polynomial_to_json(&p("q + t + 1")),
            r#"{"vars":["q","t"],"terms":[{"q":1,"t":0,"coeff":"1"},{"q":0,"t":1,"coeff":"1"},{"q":0,"t":0,"coeff":"1"}]}"#
        );
        assert_eq!(
            polynomial_to_json(&p("t^3 + 4t^2")),
            r#"{"vars":["q","t"],"terms":[{"q":0,"t":3,"coeff":"1"},{"q":0,"t":2,"coeff":"4"}]}"#
        );
    }

    #[test]
    fn csv_and_text() {
        let csv = String::from_utf8(serialize_polynomial(&p("2q^2t - 3"), Format::Csv)).unwrap();
        assert_eq!(csv, "q_exp,t_exp,coeff\r\n2,1,2\r\n0,0,-3\r\n");
        let text = String::from_utf8(serialize_polynomial(&p("1 + t + q"), Format::Text)).unwrap();
        assert_eq!(text, "q + t + 1\n");
    }

    #[test]
    fn large_coefficients_survive() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let poly = BivariatePolynomial::monomial(big.clone(), 3, 1);
        let back = polynomial_from_json(&polynomial_to_json(&poly)).unwrap();
        assert_eq!(back.coeff(3, 1), big);
    }

    #[test]
    fn rejects_bad_json() {
        assert!(polynomial_from_json(r#"{"vars":["x"],"terms":[]}"#).is_err());
        assert!(polynomial_from_json(r#"{"vars":["q","t"],"terms":[{"q":0,"t":0,"coeff":"x"}]}"#).is_err());
        assert!(polynomial_from_json("[").is_err());
    }

    proptest! {
        #[test]
        fn json_round_trip(terms in prop::collection::vec((0usize..6, 0usize..6, -1000i64..1000), 0..10)) {
            let poly = BivariatePolynomial::from_terms(
                terms.into_iter().map(|(a, b, c)| (a, b, BigInt::from(c))),
            );
            prop_assert_eq!(polynomial_from_json(&polynomial_to_json(&poly)).unwrap(), poly.clone());
            prop_assert_eq!(polynomial_from_str(&poly.to_string()).unwrap(), poly);
        }
    }
}
