//! DIMACS CNF: `p cnf V C`, then clauses as `±(variable+1)` tokens each
//! terminated by `0`. Repeated literals are kept.

use std::fmt::Write;

use thiserror::Error;

use super::{Clause, CnfInstance, Literal};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CnfError {
    #[error("line {line}: malformed header: {detail}")]
    MalformedHeader { line: usize, detail: String },
    #[error("missing `p cnf` header")]
    MissingHeader,
    #[error("line {line}: `{token}` is not an integer literal")]
    BadToken { line: usize, token: String },
    #[error("line {line}: variable {variable} out of range 1..={variables}")]
    VariableOutOfRange {
        line: usize,
        variable: u64,
        variables: usize,
    },
    #[error("line {line}: zero with no literals before it (empty clause)")]
    EmptyClause { line: usize },
    #[error("last clause is not terminated by 0")]
    Unterminated,
    #[error("header announces {expected} clauses but {found} were read")]
    ClauseCount { expected: usize, found: usize },
}

pub fn write_dimacs_cnf(inst: &CnfInstance) -> String {
    let mut out = format!("p cnf {} {}\n", inst.variable_count(), inst.clauses().len());
    for c in inst.clauses() {
        for l in c.literals() {
            write!(out, "{} ", l.to_dimacs()).expect("writing to a String");
        }
        out.push_str("0\n");
    }
    out
}

/// Parses DIMACS CNF; comment lines start with `c`. Clauses may span lines.
/// Each clause is stored in canonical (sorted) order.
pub fn read_dimacs_cnf(text: &str) -> Result<CnfInstance, CnfError> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut current: Vec<Literal> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') || trimmed.starts_with('%') {
            continue;
        }
        if trimmed.starts_with('p') {
            if header.is_some() {
                return Err(CnfError::MalformedHeader {
                    line,
                    detail: "duplicate header".into(),
                });
            }
            header = Some(parse_header(trimmed, line)?);
            continue;
        }
        let Some((variables, _)) = header else {
            return Err(CnfError::MissingHeader);
        };
        for token in trimmed.split_whitespace() {
            let value: i64 = token.parse().map_err(|_| CnfError::BadToken {
                line,
                token: token.to_string(),
            })?;
            if value == 0 {
                if current.is_empty() {
                    return Err(CnfError::EmptyClause { line });
                }
                clauses.push(Clause::new(std::mem::take(&mut current)).expect("nonempty"));
                continue;
            }
            let variable = value.unsigned_abs();
            if variable as usize > variables {
                return Err(CnfError::VariableOutOfRange {
                    line,
                    variable,
                    variables,
                });
            }
            let v = variable as usize - 1;
            current.push(if value > 0 { Literal::pos(v) } else { Literal::neg(v) });
        }
    }
    let (variables, expected) = header.ok_or(CnfError::MissingHeader)?;
    if !current.is_empty() {
        return Err(CnfError::Unterminated);
    }
    if clauses.len() != expected {
        return Err(CnfError::ClauseCount {
            expected,
            found: clauses.len(),
        });
    }
    Ok(CnfInstance::new(variables, clauses).expect("variables checked while parsing"))
}

fn parse_header(line_text: &str, line: usize) -> Result<(usize, usize), CnfError> {
    let parts: Vec<&str> = line_text.split_whitespace().collect();
    let bad = |detail: &str| CnfError::MalformedHeader {
        line,
        detail: detail.to_string(),
    };
    if parts.len() != 4 || parts[0] != "p" || parts[1] != "cnf" {
        return Err(bad("expected `p cnf <variables> <clauses>`"));
    }
    let v = parts[2].parse().map_err(|_| bad("variable count is not a number"))?;
    let c = parts[3].parse().map_err(|_| bad("clause count is not a number"))?;
    Ok((v, c))
}

#[cfg(test)]
mod tests {
    use super::super::gen_unsat_family;
    use super::*;

    #[test]
    fn encodes_small_instance() {
        let inst = CnfInstance::from_literals(
            1,
            vec![
                vec![Literal::pos(0), Literal::pos(0)],
                vec![Literal::neg(0), Literal::neg(0)],
            ],
        )
        .unwrap();
        let text = write_dimacs_cnf(&inst);
        assert_eq!(text, "p cnf 1 2\n1 1 0\n-1 -1 0\n");
        assert_eq!(read_dimacs_cnf(&text).unwrap(), inst);
    }

    #[test]
    fn family_round_trip() {
        let inst = gen_unsat_family(4).unwrap();
        let text = write_dimacs_cnf(&inst);
        assert!(text.starts_with("p cnf 7 8\n"));
        assert_eq!(text.lines().count(), 9);
        let back = read_dimacs_cnf(&text).unwrap();
        assert_eq!(write_dimacs_cnf(&back), text);
        assert_eq!(back.clauses(), inst.clauses());
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(matches!(read_dimacs_cnf("1 0\n"), Err(CnfError::MissingHeader)));
        assert!(matches!(
            read_dimacs_cnf("p cnf x 1\n"),
            Err(CnfError::MalformedHeader { .. })
        ));
        assert!(matches!(
            read_dimacs_cnf("p cnf 1 1\n0\n"),
            Err(CnfError::EmptyClause { line: 2 })
        ));
        assert!(matches!(
            read_dimacs_cnf("p cnf 1 1\n2 0\n"),
            Err(CnfError::VariableOutOfRange { variable: 2, .. })
        ));
        assert!(matches!(read_dimacs_cnf("p cnf 1 1\n1\n"), Err(CnfError::Unterminated)));
        assert!(matches!(
            read_dimacs_cnf("p cnf 1 2\n1 0\n"),
            Err(CnfError::ClauseCount { .. })
        ));
        assert!(matches!(
            read_dimacs_cnf("p cnf 1 1\n1 a 0\n"),
            Err(CnfError::BadToken { .. })
        ));
    }

    #[test]
    fn clauses_may_span_lines() {
        let inst = read_dimacs_cnf("c hi\np cnf 2 1\n2 -1\n 1 0\n").unwrap();
        assert_eq!(inst.clauses()[0].len(), 3);
    }
}
