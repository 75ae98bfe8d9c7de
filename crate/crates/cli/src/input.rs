//! The module file format.
//!
//! ```text
//! # S/(x1*y1) over F_32003[x1,x2,y1,y2]
//! p=32003
//! m=2
//! n=2
//! gens=(0,0)
//! rels=(1,1): x1*y1
//! ```
//!
//! `gens` lists generator bidegrees. Each `rels` line is one relation: its
//! bidegree, then one polynomial per generator. No `rels` line means a free
//! module; an empty `gens=` means the zero module. `p` defaults to 32003.

use std::fmt::Write as _;

use bicoh::error::{Error, Result};
use bicoh::arith::DEFAULT_PRIME;
use bicoh::poly::{parse_poly, Bidegree, Polynomial, RingSpec};
use bicoh::resolve::Presentation;

fn format_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Format { line, msg: msg.into() }
}

/// Parses `(a,b)` at the start of `s`, returning the rest.
fn parse_bidegree(s: &str, line: usize) -> Result<(Bidegree, &str)> {
    let s = s.trim_start();
    let body = s
        .strip_prefix('(')
        .ok_or_else(|| format_err(line, format!("expected `(a,b)`, found `{s}`")))?;
    let close = body.find(')').ok_or_else(|| format_err(line, "unclosed `(`"))?;
    let (a, b) = body[..close]
        .split_once(',')
        .ok_or_else(|| format_err(line, "bidegree needs two components"))?;
    let num = |t: &str| {
        t.trim()
            .parse::<i64>()
            .map_err(|_| format_err(line, format!("bad integer `{}`", t.trim())))
    };
    Ok((Bidegree::new(num(a)?, num(b)?), &body[close + 1..]))
}

fn parse_bidegree_list(s: &str, line: usize) -> Result<Vec<Bidegree>> {
    let mut out = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let (d, tail) = parse_bidegree(rest, line)?;
        out.push(d);
        rest = tail.trim_start();
        if let Some(t) = rest.strip_prefix(',') {
            rest = t.trim_start();
            if rest.is_empty() {
                return Err(format_err(line, "trailing `,`"));
            }
        } else if !rest.is_empty() {
            return Err(format_err(line, format!("unexpected `{rest}`")));
        }
    }
    Ok(out)
}

fn once<T>(slot: &Option<T>, line: usize, key: &str) -> Result<()> {
    match slot {
        Some(_) => Err(format_err(line, format!("duplicate key `{key}`"))),
        None => Ok(()),
    }
}

/// Reads a presentation, validating every entry's bidegree.
pub fn parse_module(text: &str) -> Result<Presentation> {
    let mut p = None;
    let mut m = None;
    let mut n = None;
    let mut gens = None;
    let mut rels: Vec<(usize, &str)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, value) = content
            .split_once('=')
            .ok_or_else(|| format_err(line, format!("expected `key=value`, found `{content}`")))?;
        let int = |v: &str| {
            v.trim()
                .parse::<u64>()
                .map_err(|_| format_err(line, format!("bad integer `{}`", v.trim())))
        };
        let key = key.trim();
        match key {
            "p" => {
                once(&p, line, key)?;
                p = Some((line, int(value)?))
            }
            "m" => {
                once(&m, line, key)?;
                m = Some(int(value)? as usize)
            }
            "n" => {
                once(&n, line, key)?;
                n = Some(int(value)? as usize)
            }
            "gens" => {
                once(&gens, line, key)?;
                gens = Some(parse_bidegree_list(value, line)?)
            }
            "rels" => rels.push((line, value)),
            other => return Err(format_err(line, format!("unknown key `{other}`"))),
        }
    }
    let p = match p {
        Some((line, v)) => u32::try_from(v).map_err(|_| format_err(line, format!("p = {v} is too large")))?,
        None => DEFAULT_PRIME,
    };
    let m = m.ok_or_else(|| format_err(0, "missing `m=`"))?;
    let n = n.ok_or_else(|| format_err(0, "missing `n=`"))?;
    let gens = gens.ok_or_else(|| format_err(0, "missing `gens=`"))?;
    let ring = RingSpec::new(p, m, n)?;
    let mut relations = Vec::new();
    for (line, value) in rels {
        let (deg, rest) = parse_bidegree(value, line)?;
        let rest = rest
            .trim_start()
            .strip_prefix(':')
            .ok_or_else(|| format_err(line, "expected `:` after the relation bidegree"))?;
        let entries: Vec<Polynomial> = rest
            .split(',')
            .map(|t| parse_poly(t.trim(), ring).map_err(|e| format_err(line, e.to_string())))
            .collect::<Result<_>>()?;
        if entries.len() != gens.len() {
            return Err(format_err(
                line,
                format!("relation has {} entries for {} generators", entries.len(), gens.len()),
            ));
        }
        relations.push((deg, entries));
    }
    Presentation::new(ring, gens, relations)
}

/// Writes a presentation in the format read by [`parse_module`].
pub fn write_module(pres: &Presentation) -> String {
    let ring = pres.ring();
    let mut out = String::new();
    writeln!(out, "p={}\nm={}\nn={}", ring.p(), ring.m(), ring.n()).expect("string write");
    let list: Vec<String> = pres.generators().shifts().iter().map(|d| d.to_string()).collect();
    writeln!(out, "gens={}", list.join(",")).expect("string write");
    for (deg, col) in pres.relation_module().shifts().iter().zip(pres.matrix().columns()) {
        let entries: Vec<String> = col.iter().map(|f| f.to_string()).collect();
        writeln!(out, "rels={deg}: {}", entries.join(", ")).expect("string write");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use bicoh::fixtures;
    use proptest::prelude::*;

    #[test]
    fn hypersurface_file() {
        let text = "# S/(x1y1)\np=32003\nm=2\nn=2\ngens=(0,0)\nrels=(1,1): x1*y1\n";
        let pres = parse_module(text).unwrap();
        assert_eq!((pres.num_generators(), pres.num_relations()), (1, 1));
        assert_eq!(pres, fixtures::named("S/(x1*y1)").unwrap());
    }

    #[test]
    fn free_and_zero_modules() {
        let free = parse_module("m=1\nn=1\ngens=(0,0), (1,-1)\n").unwrap();
        assert_eq!((free.num_generators(), free.num_relations()), (2, 0));
        assert_eq!(free.ring().p(), DEFAULT_PRIME);
        let zero = parse_module("m=1\nn=1\ngens=\n").unwrap();
        assert!(zero.is_zero());
    }

    #[test]
    fn rejects_bad_input() {
        let wrong_degree = "m=2\nn=2\ngens=(0,0)\nrels=(1,0): x1*y1\n";
        assert!(matches!(parse_module(wrong_degree), Err(Error::DegreeMismatch { .. })));
        let bad_poly = "m=2\nn=2\ngens=(0,0)\nrels=(1,1): x1*+y1\n";
        assert!(matches!(parse_module(bad_poly), Err(Error::Format { line: 4, .. })));
        let arity = "m=2\nn=2\ngens=(0,0),(1,0)\nrels=(1,1): x1*y1\n";
        assert!(matches!(parse_module(arity), Err(Error::Format { line: 4, .. })));
        assert!(matches!(parse_module("m=2\ngens=(0,0)\n"), Err(Error::Format { .. })));
        assert!(matches!(parse_module("m=2\nn=2\nm=3\ngens=(0,0)\n"), Err(Error::Format { line: 3, .. })));
        assert!(matches!(parse_module("p=10\nm=1\nn=1\ngens=(0,0)\n"), Err(Error::NotPrime(10))));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(12))]

        #[test]
        fn written_modules_reload(seed in 0u64..1000) {
            let ring = RingSpec::standard(2, 2);
            for pres in fixtures::random_quotients(ring, 2, 3, Bidegree::new(2, 2), seed) {
                prop_assert_eq!(parse_module(&write_module(&pres)).unwrap(), pres);
            }
        }
    }
}
