//! Line-oriented text formats for spaces, vectors, ideals and codes.
//!
//! Space file:
//!
//! ```text
//! # comment
//! m 5
//! blocks 1 1
//! order 1<2
//! ```
//!
//! The `order` line is optional (absent means antichain) and may repeat.
//! A code file starts with `explicit` followed by one vector per line, or
//! `linear` followed by generator rows that are expanded to their span.

use crate::block_space::{BlockSpace, BlockVector};
use crate::codes::Code;
use crate::error::{Error, Result};
use crate::multiset::Multiset;
use crate::pomset::Ideal;

/// Non-blank, non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn parse_num<T: std::str::FromStr>(line: usize, tok: &str, what: &str) -> Result<T> {
    tok.parse()
        .map_err(|_| Error::parse(line, format!("bad {what} `{tok}`")))
}

pub fn parse_space(text: &str) -> Result<BlockSpace> {
    let mut m: Option<u32> = None;
    let mut blocks: Option<Vec<usize>> = None;
    let mut pairs = Vec::new();
    let mut last = 0;
    for (line, body) in content_lines(text) {
        last = line;
        let mut toks = body.split_whitespace();
        let key = toks.next().expect("non-empty line");
        match key {
            "m" => {
                if m.is_some() {
                    return Err(Error::parse(line, "duplicate `m` line"));
                }
                let v: Vec<&str> = toks.collect();
                if v.len() != 1 {
                    return Err(Error::parse(line, "expected `m <int>`"));
                }
                m = Some(parse_num(line, v[0], "modulus")?);
            }
            "blocks" => {
                if blocks.is_some() {
                    return Err(Error::parse(line, "duplicate `blocks` line"));
                }
                let v = toks
                    .map(|t| parse_num(line, t, "block length"))
                    .collect::<Result<Vec<usize>>>()?;
                if v.is_empty() {
                    return Err(Error::parse(line, "expected at least one block length"));
                }
                blocks = Some(v);
            }
            "order" => {
                for tok in toks {
                    let (a, b) = tok
                        .split_once('<')
                        .ok_or_else(|| Error::parse(line, format!("expected i<j, got `{tok}`")))?;
                    pairs.push((parse_num(line, a, "index")?, parse_num(line, b, "index")?));
                }
            }
            other => return Err(Error::parse(line, format!("unknown key `{other}`"))),
        }
    }
    let m = m.ok_or_else(|| Error::parse(last + 1, "missing `m` line"))?;
    let blocks = blocks.ok_or_else(|| Error::parse(last + 1, "missing `blocks` line"))?;
    BlockSpace::with_order(m, blocks, &pairs)
}

pub fn write_space(space: &BlockSpace) -> String {
    let mut out = format!("m {}\nblocks", space.m());
    for k in space.blocks() {
        out.push_str(&format!(" {k}"));
    }
    out.push('\n');
    let covers = space.pomset().cover_pairs();
    if !covers.is_empty() {
        out.push_str("order");
        for (a, b) in covers {
            out.push_str(&format!(" {a}<{b}"));
        }
        out.push('\n');
    }
    out
}

/// `N` residues separated by whitespace or commas; negatives are reduced.
pub fn parse_vector(space: &BlockSpace, text: &str) -> Result<BlockVector> {
    parse_vector_at(space, text, 1)
}

fn parse_vector_at(space: &BlockSpace, text: &str, line: usize) -> Result<BlockVector> {
    let coords = text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| parse_num(line, t, "residue"))
        .collect::<Result<Vec<i64>>>()?;
    space.vector(&coords)
}

pub fn parse_ideal(space: &BlockSpace, text: &str) -> Result<Ideal> {
    let p = space.pomset();
    p.ideal(Multiset::parse(p.n(), p.height(), text)?)
}

pub fn parse_code(space: &BlockSpace, text: &str, cap: u128) -> Result<Code> {
    let mut lines = content_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "empty code file"))?;
    let rows = lines
        .map(|(line, body)| parse_vector_at(space, body, line))
        .collect::<Result<Vec<_>>>()?;
    match header {
        "explicit" => Code::explicit(space, rows),
        "linear" => Code::span(space, &rows, cap),
        other => Err(Error::parse(
            hline,
            format!("expected `explicit` or `linear`, got `{other}`"),
        )),
    }
}

pub fn write_code(code: &Code) -> String {
    let mut out = String::from("explicit\n");
    for w in code.words() {
        out.push_str(&w.to_string());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::block_space::DEFAULT_CAP;

    const EXAMPLE: &str = "# six blocks\nm 7\nblocks 2 3 4 4 3 2\norder 1<2 2<4\norder 1<4 5<6\n";

    #[test]
    fn space_round_trip() {
        let s = parse_space(EXAMPLE).unwrap();
        assert_eq!(s.len(), 18);
        assert!(s.pomset().less(1, 4));
        let again = parse_space(&write_space(&s)).unwrap();
        assert_eq!(again, s);
        let anti = parse_space("m 4\nblocks 1 1\n").unwrap();
        assert!(anti.pomset().is_antichain());
        assert_eq!(write_space(&anti), "m 4\nblocks 1 1\n");
    }

    #[test]
    fn space_errors_carry_lines() {
        assert_eq!(
            parse_space("m 5\nblocks 1 x\n"),
            Err(Error::Parse {
                line: 2,
                msg: "bad block length `x`".into()
            })
        );
        assert!(matches!(parse_space("m 5\n\nfoo 1\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_space("blocks 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_space("m 5\nblocks 1\norder 1-2\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_space("m 5\nblocks 1 1\norder 1<2 2<1\n"), Err(Error::CycleDetected(_))));
    }

    #[test]
    fn vectors_and_ideals() {
        let s = parse_space(EXAMPLE).unwrap();
        let v = parse_vector(&s, "0 0 0 0 0 0 0 0 0 0 1 0 1 0 0 0 2 0").unwrap();
        assert_eq!(s.weight(&v), 12);
        assert!(matches!(parse_vector(&s, "1 2"), Err(Error::LengthMismatch { .. })));
        let c = parse_space("m 5\nblocks 1 1\norder 1<2\n").unwrap();
        assert_eq!(parse_vector(&c, "-1, 6").unwrap().coords(), &[4, 1]);
        assert_eq!(parse_ideal(&c, "2/1 1/2").unwrap().cardinality(), 3);
        assert!(matches!(parse_ideal(&c, "1/2"), Err(Error::NotAnIdeal { .. })));
    }

    #[test]
    fn code_round_trip() {
        let s = parse_space("m 5\nblocks 1 1\norder 1<2\n").unwrap();
        let lin = parse_code(&s, "linear\n1 1\n", DEFAULT_CAP).unwrap();
        assert_eq!(lin.len(), 5);
        let text = write_code(&lin);
        assert_eq!(parse_code(&s, &text, DEFAULT_CAP).unwrap(), lin);
        let exp = parse_code(&s, "explicit\n# two words\n0 0\n1 0\n", DEFAULT_CAP).unwrap();
        assert_eq!(exp.len(), 2);
        assert!(matches!(parse_code(&s, "", DEFAULT_CAP), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_code(&s, "basis\n1 1\n", DEFAULT_CAP), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_code(&s, "explicit\n0 0\n0 z\n", DEFAULT_CAP), Err(Error::Parse { line: 3, .. })));
    }
}
