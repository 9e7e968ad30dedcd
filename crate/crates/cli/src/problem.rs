//! Line-oriented problem files.
//!
//! ```text
//! field 5
//! vars x y z
//! order lex        # or: grevlex
//! ideal
//! y^2 - x*z
//! z^2 - x^2*y
//! x + y + z - 1
//! ```

use std::sync::Arc;

use fqdecomp::groebner::Ideal;
use fqdecomp::mpoly::{OrderKind, Polynomial, Ring};

use crate::CliError;

#[derive(Clone, Debug)]
pub struct ProblemFile {
    pub ring: Arc<Ring>,
    pub generators: Vec<Polynomial>,
}

impl ProblemFile {
    pub fn ideal(&self) -> Ideal {
        Ideal::new(&self.ring, self.generators.clone())
    }
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> CliError {
    CliError::Parse { line, column, message: message.into() }
}

/// Splits `text` into whitespace-separated words with 1-based columns.
fn words(text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (col, (i, ch)) in text.char_indices().enumerate() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some((col + 1, i)),
            (true, Some((c, s))) => {
                out.push((c, &text[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some((c, s)) = start {
        out.push((c, &text[s..]));
    }
    out
}

/// Parses a problem file. `order_override` replaces the file's `order` line.
pub fn parse(text: &str, order_override: Option<OrderKind>) -> Result<ProblemFile, CliError> {
    let mut field: Option<(usize, usize, u64)> = None;
    let mut vars: Option<(usize, Vec<String>)> = None;
    let mut order = OrderKind::Lex;
    let mut ring: Option<Arc<Ring>> = None;
    let mut generators = Vec::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("");
        let toks = words(content);
        let Some(&(col, keyword)) = toks.first() else { continue };

        if let Some(ring) = &ring {
            let trimmed = content.trim_start();
            let offset = content.chars().count() - trimmed.chars().count();
            let poly = ring.parse(trimmed.trim_end()).map_err(|e| match e {
                fqdecomp::Error::Parse { column, message } => parse_error(line, offset + column, message),
                fqdecomp::Error::UnknownVariable { name, column } => {
                    parse_error(line, offset + column, format!("unknown variable `{name}`"))
                }
                other => parse_error(line, offset + 1, other.to_string()),
            })?;
            generators.push(poly);
            continue;
        }

        let args = &toks[1..];
        match keyword {
            "field" => {
                let &[(c, v)] = args else {
                    return Err(parse_error(line, col, "expected `field <prime>`"));
                };
                let p = v.parse::<u64>().map_err(|_| parse_error(line, c, format!("invalid modulus `{v}`")))?;
                field = Some((line, c, p));
            }
            "vars" => {
                if args.is_empty() {
                    return Err(parse_error(line, col, "expected at least one variable"));
                }
                vars = Some((line, args.iter().map(|(_, v)| v.to_string()).collect()));
            }
            "order" => {
                let &[(c, v)] = args else {
                    return Err(parse_error(line, col, "expected `order lex|grevlex`"));
                };
                order = v.parse().map_err(|_| parse_error(line, c, format!("unknown order `{v}`")))?;
            }
            "ideal" => {
                if let Some(&(c, _)) = args.first() {
                    return Err(parse_error(line, c, "generators go on the lines after `ideal`"));
                }
                let (fline, fcol, p) = field.ok_or_else(|| parse_error(line, col, "missing `field` line"))?;
                let (vline, names) = vars.clone().ok_or_else(|| parse_error(line, col, "missing `vars` line"))?;
                let kind = order_override.unwrap_or(order);
                ring = Some(Ring::new(p, &names, kind).map_err(|e| match e {
                    fqdecomp::Error::NotPrime(_) | fqdecomp::Error::ModulusTooLarge(_) => {
                        parse_error(fline, fcol, e.to_string())
                    }
                    other => parse_error(vline, 1, other.to_string()),
                })?);
            }
            other => return Err(parse_error(line, col, format!("unknown directive `{other}`"))),
        }
    }

    let ring = ring.ok_or_else(|| parse_error(last_line.max(1), 1, "missing `ideal` section"))?;
    if generators.is_empty() {
        return Err(parse_error(last_line.max(1), 1, "no generators after `ideal`"));
    }
    Ok(ProblemFile { ring, generators })
}

#[cfg(test)]
mod tests {
    use super::*;

    const SYSTEM: &str =
        "field 5\nvars x y z\norder lex        # or: grevlex\nideal\ny^2 - x*z\nz^2 - x^2*y\nx + y + z - 1\n";

    fn err(text: &str) -> (usize, usize, String) {
        match parse(text, None).unwrap_err() {
            CliError::Parse { line, column, message } => (line, column, message),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn reads_the_documented_layout() {
        let pf = parse(SYSTEM, None).unwrap();
        assert_eq!(pf.ring.vars(), ["x", "y", "z"]);
        assert_eq!(pf.ring.modulus(), 5);
        let texts: Vec<String> = pf.generators.iter().map(|g| g.to_string()).collect();
        assert_eq!(texts, ["4*x*z+y^2", "4*x^2*y+z^2", "x+y+z+4"]);
        let pf = parse(SYSTEM, Some(OrderKind::Grevlex)).unwrap();
        assert_eq!(pf.ring.order().kind(), OrderKind::Grevlex);
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# header\n\nfield 3 # small\nvars x\nideal\n\n  x^2+1  # irreducible\n";
        let pf = parse(text, None).unwrap();
        assert_eq!(pf.generators.len(), 1);
    }

    #[test]
    fn error_positions() {
        assert_eq!(err("field 4\nvars x\nideal\nx\n"), (1, 7, "modulus must be prime (got 4)".into()));
        assert_eq!(err("field five\n").0, 1);
        assert_eq!(err("field 5\nvars x y\nideal\n  x + w\n"), (4, 7, "unknown variable `w`".into()));
        assert_eq!(err("field 5\nvars x\nideal\nx +\n").1, 4);
        assert_eq!(err("field 5\nvars x\nmodulus 3\n"), (3, 1, "unknown directive `modulus`".into()));
        assert_eq!(err("field 5\nvars x\norder deglex\n").1, 7);
        assert_eq!(err("vars x\nideal\nx\n").2, "missing `field` line");
        assert_eq!(err("field 5\nvars x\nideal\n").2, "no generators after `ideal`");
        assert_eq!(err("field 5\nvars x\n").2, "missing `ideal` section");
    }
}
