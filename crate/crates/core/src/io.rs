//! Line-oriented text formats for algebras, modules and supercommutative
//! algebras. Blank lines and `#` comments are ignored; rationals are written
//! as `p` or `p/q`. Matrices are written row-major on one line with rows
//! separated by `;`.
//!
//! Lie superalgebra:
//!
//! ```text
//! name gl(1|1)
//! basis E11 even
//! basis E12 odd
//! bracket E12 E21 E11 1
//! cartan E11 E22
//! rep_parity even odd
//! rep E12 0 1 ; 0 0
//! ```
//!
//! Module (labels refer to the acting algebra):
//!
//! ```text
//! parity even odd
//! action E12 0 1 ; 0 0
//! ```
//!
//! Supercommutative algebra with an optional odd derivation:
//!
//! ```text
//! name Lambda(xi)
//! basis 1 even
//! basis xi odd
//! unit 1
//! mul 1 xi xi 1
//! derivation xi 1 1
//! ```

use std::collections::HashMap;
use std::fmt::Write as _;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{format_rational, parse_rational, zero_vector, RatMatrix, RatVector, Rational};
use crate::reps::SuperModule;
use crate::superalgebra::{LieSuperalgebra, Parity};
use crate::supercomm::{OddDerivation, SupercommAlgebra};

fn parse_error(line: usize, msg: impl AsRef<str>) -> Error {
    Error::Parse(format!("line {line}: {}", msg.as_ref()))
}

fn lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(n, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then(|| (n + 1, l.split_whitespace().collect()))
    })
}

fn parse_parity(line: usize, s: &str) -> Result<Parity> {
    match s {
        "even" | "0" => Ok(Parity::Even),
        "odd" | "1" => Ok(Parity::Odd),
        other => Err(parse_error(line, format!("expected 'even' or 'odd', found '{other}'"))),
    }
}

fn parse_rat(line: usize, s: &str) -> Result<Rational> {
    parse_rational(s).map_err(|_| parse_error(line, format!("invalid rational '{s}'")))
}

fn parse_matrix(line: usize, tokens: &[&str], n: usize) -> Result<RatMatrix> {
    let joined = tokens.join(" ");
    let rows: Vec<&str> = joined.split(';').collect();
    if rows.len() != n {
        return Err(parse_error(line, format!("expected {n} rows, found {}", rows.len())));
    }
    let mut m = RatMatrix::zeros(n, n);
    for (r, row) in rows.iter().enumerate() {
        let entries: Vec<&str> = row.split_whitespace().collect();
        if entries.len() != n {
            return Err(parse_error(line, format!("row {} has {} entries, expected {n}", r + 1, entries.len())));
        }
        for (c, e) in entries.iter().enumerate() {
            m[(r, c)] = parse_rat(line, e)?;
        }
    }
    Ok(m)
}

fn write_matrix(m: &RatMatrix) -> String {
    (0..m.rows())
        .map(|r| m.row(r).iter().map(format_rational).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join(" ; ")
}

fn parity_word(p: Parity) -> &'static str {
    if p.is_odd() {
        "odd"
    } else {
        "even"
    }
}

struct Labels(HashMap<String, usize>);

impl Labels {
    fn get(&self, line: usize, label: &str) -> Result<usize> {
        self.0.get(label).copied().ok_or_else(|| parse_error(line, format!("unknown basis label '{label}'")))
    }
}

/// Parses an algebra file. Axioms are not checked here.
pub fn parse_algebra(text: &str) -> Result<LieSuperalgebra> {
    let mut name = String::from("unnamed");
    let mut labels: Vec<String> = Vec::new();
    let mut parity = Vec::new();
    let mut index = Labels(HashMap::new());
    let mut brackets = Vec::new();
    let mut cartan: Option<Vec<usize>> = None;
    let mut rep_parity: Option<Vec<Parity>> = None;
    let mut rep_mats: Vec<(usize, usize, Vec<String>)> = Vec::new();
    for (n, tok) in lines(text) {
        match tok[0] {
            "name" => name = tok[1..].join(" "),
            "basis" => {
                if tok.len() != 3 {
                    return Err(parse_error(n, "expected 'basis <label> <even|odd>'"));
                }
                if index.0.contains_key(tok[1]) {
                    return Err(parse_error(n, format!("duplicate basis label '{}'", tok[1])));
                }
                index.0.insert(tok[1].to_string(), labels.len());
                labels.push(tok[1].to_string());
                parity.push(parse_parity(n, tok[2])?);
            }
            "bracket" => {
                if tok.len() != 5 {
                    return Err(parse_error(n, "expected 'bracket <x> <y> <z> <coefficient>'"));
                }
                let (i, j, k) = (index.get(n, tok[1])?, index.get(n, tok[2])?, index.get(n, tok[3])?);
                brackets.push((i, j, k, parse_rat(n, tok[4])?));
            }
            "cartan" => {
                cartan = Some(tok[1..].iter().map(|l| index.get(n, l)).collect::<Result<_>>()?);
            }
            "rep_parity" => {
                rep_parity = Some(tok[1..].iter().map(|p| parse_parity(n, p)).collect::<Result<_>>()?);
            }
            "rep" => {
                if tok.len() < 2 {
                    return Err(parse_error(n, "expected 'rep <label> <matrix>'"));
                }
                let i = index.get(n, tok[1])?;
                rep_mats.push((n, i, tok[2..].iter().map(|s| s.to_string()).collect()));
            }
            other => return Err(parse_error(n, format!("unknown keyword '{other}'"))),
        }
    }
    let dim = labels.len();
    let mut g = LieSuperalgebra::new(name, labels, parity, brackets)?;
    if let Some(c) = cartan {
        g = g.with_cartan(c);
    }
    match rep_parity {
        Some(rp) => {
            let size = rp.len();
            let mut action = vec![RatMatrix::zeros(size, size); dim];
            for (n, i, toks) in rep_mats {
                let refs: Vec<&str> = toks.iter().map(String::as_str).collect();
                action[i] = parse_matrix(n, &refs, size)?;
            }
            g = g.with_faithful_rep(SuperModule::new(rp, action));
        }
        None if !rep_mats.is_empty() => {
            return Err(parse_error(rep_mats[0].0, "'rep' given without 'rep_parity'"));
        }
        None => {}
    }
    Ok(g)
}

/// Serializes an algebra; [`parse_algebra`] inverts this exactly.
pub fn write_algebra(g: &LieSuperalgebra) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "name {}", g.name());
    for i in 0..g.dim() {
        let _ = writeln!(out, "basis {} {}", g.label(i), parity_word(g.parity(i)));
    }
    for (i, j, k, c) in g.structure_entries() {
        let _ = writeln!(out, "bracket {} {} {} {}", g.label(i), g.label(j), g.label(k), format_rational(&c));
    }
    if let Some(c) = g.cartan() {
        let names: Vec<&str> = c.iter().map(|&i| g.label(i)).collect();
        let _ = writeln!(out, "cartan {}", names.join(" "));
    }
    if let Some(rep) = g.faithful_rep() {
        let ps: Vec<&str> = rep.parities().iter().map(|&p| parity_word(p)).collect();
        let _ = writeln!(out, "rep_parity {}", ps.join(" "));
        for i in 0..g.dim() {
            let m = rep.action(i);
            if !m.is_zero() {
                let _ = writeln!(out, "rep {} {}", g.label(i), write_matrix(m));
            }
        }
    }
    out
}

/// Parses a module over `g`; unlisted basis elements act by zero.
pub fn parse_module(text: &str, g: &LieSuperalgebra) -> Result<SuperModule> {
    let index = Labels(g.labels().iter().enumerate().map(|(i, l)| (l.clone(), i)).collect());
    let mut parity: Option<Vec<Parity>> = None;
    let mut pending = Vec::new();
    for (n, tok) in lines(text) {
        match tok[0] {
            "algebra" => {}
            "parity" => parity = Some(tok[1..].iter().map(|p| parse_parity(n, p)).collect::<Result<_>>()?),
            "action" => {
                if tok.len() < 2 {
                    return Err(parse_error(n, "expected 'action <label> <matrix>'"));
                }
                pending.push((n, index.get(n, tok[1])?, tok[2..].iter().map(|s| s.to_string()).collect::<Vec<_>>()));
            }
            other => return Err(parse_error(n, format!("unknown keyword '{other}'"))),
        }
    }
    let parity = parity.ok_or_else(|| Error::Parse("missing 'parity' line".into()))?;
    let size = parity.len();
    let mut action = vec![RatMatrix::zeros(size, size); g.dim()];
    for (n, i, toks) in pending {
        let refs: Vec<&str> = toks.iter().map(String::as_str).collect();
        action[i] = parse_matrix(n, &refs, size)?;
    }
    Ok(SuperModule::new(parity, action))
}

pub fn write_module(g: &LieSuperalgebra, m: &SuperModule) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "algebra {}", g.name());
    let ps: Vec<&str> = m.parities().iter().map(|&p| parity_word(p)).collect();
    let _ = writeln!(out, "parity {}", ps.join(" "));
    for i in 0..g.dim() {
        if !m.action(i).is_zero() {
            let _ = writeln!(out, "action {} {}", g.label(i), write_matrix(m.action(i)));
        }
    }
    out
}

/// Parses a supercommutative algebra and its derivation, if one is given.
pub fn parse_supercomm(text: &str) -> Result<(SupercommAlgebra, Option<OddDerivation>)> {
    let mut name = String::from("unnamed");
    let mut labels = Vec::new();
    let mut parity = Vec::new();
    let mut index = Labels(HashMap::new());
    let mut unit: Option<(usize, String)> = None;
    let mut muls = Vec::new();
    let mut derivation = Vec::new();
    for (n, tok) in lines(text) {
        match tok[0] {
            "name" => name = tok[1..].join(" "),
            "basis" => {
                if tok.len() != 3 {
                    return Err(parse_error(n, "expected 'basis <label> <even|odd>'"));
                }
                index.0.insert(tok[1].to_string(), labels.len());
                labels.push(tok[1].to_string());
                parity.push(parse_parity(n, tok[2])?);
            }
            "unit" if tok.len() == 2 => unit = Some((n, tok[1].to_string())),
            "mul" if tok.len() == 5 => muls.push((n, tok[1..].iter().map(|s| s.to_string()).collect::<Vec<_>>())),
            "derivation" if tok.len() == 4 => {
                derivation.push((n, tok[1..].iter().map(|s| s.to_string()).collect::<Vec<_>>()))
            }
            other => return Err(parse_error(n, format!("malformed or unknown line starting with '{other}'"))),
        }
    }
    let d = labels.len();
    let (un, ul) = unit.ok_or_else(|| Error::Parse("missing 'unit' line".into()))?;
    let mut unit_vec = zero_vector(d);
    unit_vec[index.get(un, &ul)?] = Rational::from_integer(1.into());
    let mut entries = Vec::new();
    for (n, t) in muls {
        entries.push((index.get(n, &t[0])?, index.get(n, &t[1])?, index.get(n, &t[2])?, parse_rat(n, &t[3])?));
    }
    let algebra = SupercommAlgebra::new(name, labels, parity, entries, unit_vec)?;
    let u = if derivation.is_empty() {
        None
    } else {
        let mut m = RatMatrix::zeros(d, d);
        for (n, t) in derivation {
            let (from, to) = (index.get(n, &t[0])?, index.get(n, &t[1])?);
            m[(to, from)] += parse_rat(n, &t[2])?;
        }
        Some(OddDerivation::new(m))
    };
    Ok((algebra, u))
}

pub fn write_supercomm(a: &SupercommAlgebra, u: Option<&OddDerivation>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "name {}", a.name());
    for (l, p) in a.labels().iter().zip(a.parities()) {
        let _ = writeln!(out, "basis {l} {}", parity_word(*p));
    }
    let unit = a.unit().iter().position(|c| !c.is_zero()).unwrap_or(0);
    let _ = writeln!(out, "unit {}", a.labels()[unit]);
    for (i, j, k, c) in a.table_entries() {
        let _ = writeln!(out, "mul {} {} {} {}", a.labels()[i], a.labels()[j], a.labels()[k], format_rational(&c));
    }
    if let Some(u) = u {
        for from in 0..a.dim() {
            for to in 0..a.dim() {
                let c = &u.matrix[(to, from)];
                if !c.is_zero() {
                    let _ = writeln!(out, "derivation {} {} {}", a.labels()[from], a.labels()[to], format_rational(c));
                }
            }
        }
    }
    out
}

/// Parses an element of `g`: either positional coordinates (`1,0,0,1` or
/// `1 0 0 1`) or `label=value` pairs (`E12=1,E21=1`).
pub fn parse_element(s: &str, g: &LieSuperalgebra) -> Result<RatVector> {
    let parts: Vec<&str> = s.split(|c: char| c == ',' || c.is_whitespace()).filter(|p| !p.is_empty()).collect();
    let mut v = zero_vector(g.dim());
    if parts.iter().any(|p| p.contains('=')) {
        for p in parts {
            let (label, value) = p
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected label=value, found '{p}'")))?;
            let i = g.index_of(label).ok_or_else(|| Error::Parse(format!("unknown basis label '{label}'")))?;
            v[i] += parse_rational(value)?;
        }
        return Ok(v);
    }
    if parts.len() != g.dim() {
        return Err(Error::DimensionMismatch { expected: g.dim(), got: parts.len() });
    }
    for (slot, p) in v.iter_mut().zip(parts) {
        *slot = parse_rational(p)?;
    }
    Ok(v)
}

/// Space-separated rational coordinates.
pub fn format_vector(v: &[Rational]) -> String {
    v.iter().map(format_rational).collect::<Vec<_>>().join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::supercomm;

    #[test]
    fn algebra_round_trip() {
        for g in [families::build_gl(1, 1), families::build_osp1(2), families::build_toy_odd_semisimple()] {
            let text = write_algebra(&g);
            assert_eq!(parse_algebra(&text).unwrap(), g);
        }
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = parse_algebra("name x\nbasis a odd\nbracket a a b 1\n").unwrap_err();
        assert_eq!(err, Error::Parse("line 3: unknown basis label 'b'".into()));
        assert!(parse_algebra("basis a purple").is_err());
        assert!(parse_algebra("frobnicate").is_err());
    }

    #[test]
    fn module_and_supercomm_round_trip() {
        let g = families::build_gl(1, 1);
        let m = g.faithful_rep().unwrap().clone();
        assert_eq!(parse_module(&write_module(&g, &m), &g).unwrap(), m);
        let (a, u) = supercomm::quadratic_unit_example();
        let (b, v) = parse_supercomm(&write_supercomm(&a, Some(&u))).unwrap();
        assert_eq!((b, v), (a, Some(u)));
    }

    #[test]
    fn elements_by_label_or_position() {
        let g = families::build_gl(1, 1);
        let a = parse_element("E12=1,E21=1", &g).unwrap();
        let b = parse_element("0,1,1,0", &g).unwrap();
        assert_eq!(a, b);
        assert!(parse_element("1,2", &g).is_err());
    }
}
