//! Plain-text automaton, transducer and morphism files.
//!
//! Transducer files start with the input alphabet `{a, b, …}` followed by
//! one block per state: a line with the state id, then one line
//! `in -> dest / out` per input symbol. DFAO files start with an optional
//! numeration header (`msd_2`, `lsd_2`, `msd_fib`, …; default `msd_2`)
//! followed by blocks `id output` with lines `digit -> dest`. The first
//! block is the initial state. Blank lines are ignored, and so are lines
//! starting with `#` that contain no `->`.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::automaton::{Dfao, UniformMorphism};
use crate::error::{Error, Result};
use crate::numeration::NumerationSystem;
use crate::transducer::Transducer;
use crate::{symbol_to_string, Symbol, HASH};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.trim();
        let comment = l.starts_with('#') && !l.contains("->");
        (!l.is_empty() && !comment).then_some((i + 1, l))
    })
}

fn parse_symbol(token: &str, line: usize) -> Result<Symbol> {
    if token == "#" {
        return Ok(HASH);
    }
    match token.parse::<Symbol>() {
        Ok(s) if s != HASH => Ok(s),
        _ => Err(Error::parse(line, format!("`{token}` is not a symbol"))),
    }
}

/// Maps state ids to indices: ids are kept when they are exactly
/// `0..n`, otherwise states are numbered in order of appearance.
fn assign_indices(ids: &[String]) -> HashMap<String, usize> {
    let numeric: Option<Vec<usize>> = ids.iter().map(|s| s.parse().ok()).collect();
    if let Some(nums) = numeric {
        let mut sorted = nums.clone();
        sorted.sort_unstable();
        if sorted.iter().enumerate().all(|(i, &v)| i == v) {
            return ids.iter().cloned().zip(nums).collect();
        }
    }
    ids.iter()
        .cloned()
        .enumerate()
        .map(|(i, s)| (s, i))
        .collect()
}

/// `lhs -> rhs` with an optional ` / out` suffix.
fn split_arrow(l: &str, line: usize) -> Result<(&str, &str)> {
    l.split_once("->")
        .map(|(a, b)| (a.trim(), b.trim()))
        .ok_or_else(|| Error::parse(line, format!("expected `->` in `{l}`")))
}

struct Block<'a> {
    line: usize,
    header: Vec<&'a str>,
    edges: Vec<(usize, &'a str, &'a str)>,
}

fn blocks<'a>(lines: impl Iterator<Item = (usize, &'a str)>) -> Result<Vec<Block<'a>>> {
    let mut out: Vec<Block<'a>> = Vec::new();
    for (line, l) in lines {
        if l.contains("->") {
            let (lhs, rhs) = split_arrow(l, line)?;
            let block = out
                .last_mut()
                .ok_or_else(|| Error::parse(line, "transition before any state"))?;
            block.edges.push((line, lhs, rhs));
        } else {
            out.push(Block {
                line,
                header: l.split_whitespace().collect(),
                edges: Vec::new(),
            });
        }
    }
    if out.is_empty() {
        return Err(Error::parse(0, "no states"));
    }
    Ok(out)
}

pub fn parse_dfao(text: &str) -> Result<Dfao> {
    let mut lines = content_lines(text).peekable();
    let mut numeration = NumerationSystem::msd(2);
    if let Some(&(_, first)) = lines.peek() {
        if first.contains('_') && !first.contains("->") {
            numeration = first.parse()?;
            lines.next();
        }
    }
    let blocks = blocks(lines)?;
    let k = numeration.radix() as usize;

    let mut ids = Vec::with_capacity(blocks.len());
    let mut outputs = Vec::with_capacity(blocks.len());
    for b in &blocks {
        if b.header.len() != 2 {
            return Err(Error::parse(b.line, "expected `id output`"));
        }
        ids.push(b.header[0].to_string());
        outputs.push(parse_symbol(b.header[1], b.line)?);
    }
    let index = assign_indices(&ids);
    if index.len() != ids.len() {
        return Err(Error::parse(0, "duplicate state id"));
    }

    let mut next = vec![vec![None; k]; blocks.len()];
    let mut out = vec![0; blocks.len()];
    for ((b, id), &output) in blocks.iter().zip(&ids).zip(&outputs) {
        let q = index[id];
        out[q] = output;
        for &(line, lhs, rhs) in &b.edges {
            let d: usize = lhs
                .parse()
                .map_err(|_| Error::parse(line, format!("`{lhs}` is not a digit")))?;
            if d >= k {
                return Err(Error::parse(
                    line,
                    format!("digit {d} outside {numeration}"),
                ));
            }
            let t = *index
                .get(rhs)
                .ok_or_else(|| Error::parse(line, format!("unknown state `{rhs}`")))?;
            if next[q][d].replace(t).is_some() {
                return Err(Error::parse(line, format!("second transition on {d}")));
            }
        }
    }
    Dfao::new(numeration, index[&ids[0]], next, out)
}

pub fn write_dfao(m: &Dfao) -> String {
    let mut s = format!("{}\n", m.numeration());
    let order =
        std::iter::once(m.initial()).chain((0..m.state_count()).filter(|&q| q != m.initial()));
    for q in order {
        let _ = write!(s, "\n{q} {}\n", symbol_to_string(m.output(q)));
        for (d, t) in m.transitions(q).iter().enumerate() {
            if let Some(t) = t {
                let _ = writeln!(s, "{d} -> {t}");
            }
        }
    }
    s
}

pub fn parse_transducer(text: &str) -> Result<Transducer> {
    let mut lines = content_lines(text);
    let (line, first) = lines
        .next()
        .ok_or_else(|| Error::parse(0, "missing alphabet line"))?;
    let inner = first
        .strip_prefix('{')
        .and_then(|r| r.strip_suffix('}'))
        .ok_or_else(|| Error::parse(line, "expected `{a, b, …}`"))?;
    let alphabet = inner
        .split(',')
        .map(|t| parse_symbol(t.trim(), line))
        .collect::<Result<Vec<_>>>()?;

    let blocks = blocks(lines)?;
    let mut ids = Vec::with_capacity(blocks.len());
    for b in &blocks {
        if b.header.len() != 1 {
            return Err(Error::parse(b.line, "expected a state id"));
        }
        ids.push(b.header[0].to_string());
    }
    let index = assign_indices(&ids);
    if index.len() != ids.len() {
        return Err(Error::parse(0, "duplicate state id"));
    }

    let mut rows: Vec<Vec<Option<(usize, Symbol)>>> =
        vec![vec![None; alphabet.len()]; blocks.len()];
    for (b, id) in blocks.iter().zip(&ids) {
        let v = index[id];
        for &(line, lhs, rhs) in &b.edges {
            let a = parse_symbol(lhs, line)?;
            let i = alphabet
                .iter()
                .position(|&x| x == a)
                .ok_or_else(|| Error::parse(line, format!("`{lhs}` is not in the alphabet")))?;
            let (dest, out) = rhs
                .split_once('/')
                .map(|(d, o)| (d.trim(), o.trim()))
                .ok_or_else(|| Error::parse(line, "expected `dest / out`"))?;
            let t = *index
                .get(dest)
                .ok_or_else(|| Error::parse(line, format!("unknown state `{dest}`")))?;
            let o = parse_symbol(out, line)?;
            if rows[v][i].replace((t, o)).is_some() {
                return Err(Error::parse(line, format!("second transition on {lhs}")));
            }
        }
    }
    let mut table = vec![Vec::new(); blocks.len()];
    for (id, v) in &index {
        let row: Option<Vec<_>> = rows[*v].iter().copied().collect();
        table[*v] = row.ok_or_else(|| {
            let i = rows[*v].iter().position(Option::is_none).expect("missing");
            Error::MissingTransition {
                state: id.clone(),
                symbol: alphabet[i],
            }
        })?;
    }
    Transducer::new(alphabet, index[&ids[0]], table)
}

pub fn write_transducer(t: &Transducer) -> String {
    let alphabet: Vec<String> = t.alphabet().iter().map(|&a| symbol_to_string(a)).collect();
    let mut s = format!("{{{}}}\n", alphabet.join(", "));
    let order =
        std::iter::once(t.initial()).chain((0..t.state_count()).filter(|&v| v != t.initial()));
    for v in order {
        let _ = write!(s, "\n{v}\n");
        for (i, a) in alphabet.iter().enumerate() {
            let (dest, out) = t.edge(v, i);
            let _ = writeln!(s, "{a} -> {dest} / {}", symbol_to_string(out));
        }
    }
    s
}

/// Morphism files: a `morphism` line, a `seed q` line, then one line
/// `q -> a b … / out` per letter giving its image and coding.
pub fn parse_morphism(text: &str) -> Result<UniformMorphism> {
    let mut lines = content_lines(text);
    match lines.next() {
        Some((_, "morphism")) => {}
        Some((line, _)) => return Err(Error::parse(line, "expected `morphism`")),
        None => return Err(Error::parse(0, "empty morphism file")),
    }
    let (line, seed_line) = lines
        .next()
        .ok_or_else(|| Error::parse(0, "missing seed line"))?;
    let seed: usize = seed_line
        .strip_prefix("seed")
        .and_then(|s| s.trim().parse().ok())
        .ok_or_else(|| Error::parse(line, "expected `seed <letter>`"))?;
    let mut entries: Vec<(usize, Vec<usize>, Symbol)> = Vec::new();
    for (line, l) in lines {
        let (lhs, rhs) = split_arrow(l, line)?;
        let letter: usize = lhs
            .parse()
            .map_err(|_| Error::parse(line, format!("`{lhs}` is not a letter")))?;
        let (image, out) = rhs
            .split_once('/')
            .ok_or_else(|| Error::parse(line, "expected `image / out`"))?;
        let image = image
            .split_whitespace()
            .map(|t| {
                t.parse()
                    .map_err(|_| Error::parse(line, format!("`{t}` is not a letter")))
            })
            .collect::<Result<Vec<usize>>>()?;
        entries.push((letter, image, parse_symbol(out.trim(), line)?));
    }
    let n = entries.len();
    let mut images = vec![Vec::new(); n];
    let mut coding = vec![0; n];
    for (letter, image, out) in entries {
        if letter >= n || !images[letter].is_empty() {
            return Err(Error::Invalid(format!(
                "letter {letter} listed twice or out of range"
            )));
        }
        images[letter] = image;
        coding[letter] = out;
    }
    UniformMorphism::new(images, coding, seed)
}

pub fn write_morphism(m: &UniformMorphism) -> String {
    let mut s = format!("morphism\nseed {}\n", m.seed());
    for q in 0..m.alphabet_size() {
        let image: Vec<String> = m.image(q).iter().map(|c| c.to_string()).collect();
        let _ = writeln!(
            s,
            "{q} -> {} / {}",
            image.join(" "),
            symbol_to_string(m.coding()[q])
        );
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeration::Order;

    const RUNSUM2: &str = "{0, 1}\n\n0\n0 -> 0 / 0\n1 -> 1 / 1\n\n1\n0 -> 1 / 1\n1 -> 0 / 0\n";

    #[test]
    fn transducer_round_trip_is_bit_exact() {
        let t = parse_transducer(RUNSUM2).unwrap();
        assert_eq!(t.state_count(), 2);
        assert_eq!(write_transducer(&t), RUNSUM2);
    }

    #[test]
    fn comments_and_blank_lines() {
        let text =
            "# RUNSUM2.txt\n\n  {0, 1}\n0\n0 -> 0 / 0\n1 -> 1 / 1\n\n\n1\n0 -> 1 / 1\n1 -> 0 / 0";
        assert_eq!(
            parse_transducer(text).unwrap(),
            parse_transducer(RUNSUM2).unwrap()
        );
    }

    #[test]
    fn transducer_errors() {
        let missing = "{0, 1}\n\n0\n0 -> 0 / 0\n";
        assert!(matches!(
            parse_transducer(missing),
            Err(Error::MissingTransition { symbol: 1, .. })
        ));
        let bad = "{0, 1}\n\n0\n0 -> 7 / 0\n1 -> 0 / 0\n";
        assert!(matches!(
            parse_transducer(bad),
            Err(Error::Parse { line: 4, .. })
        ));
        assert!(parse_transducer("").is_err());
        assert!(parse_transducer("0, 1\n").is_err());
    }

    #[test]
    fn dfao_header_and_default() {
        let text = "lsd_2\n\n0 0\n0 -> 0\n1 -> 1\n\n1 1\n0 -> 1\n1 -> 0\n";
        let m = parse_dfao(text).unwrap();
        assert_eq!(m.numeration(), NumerationSystem::lsd(2));
        assert_eq!(write_dfao(&m), text);
        let plain = parse_dfao("0 0\n0 -> 0\n1 -> 0\n").unwrap();
        assert_eq!(plain.numeration(), NumerationSystem::msd(2));
        assert!(matches!(
            parse_dfao("msd_pi\n0 0\n"),
            Err(Error::UnknownNumeration(_))
        ));
        assert!(parse_dfao("").is_err());
        assert!(parse_dfao("msd_2\n").is_err());
    }

    #[test]
    fn partial_fibonacci_and_hash_outputs() {
        let text = "msd_fib\n\n0 0\n0 -> 0\n1 -> 1\n\n1 #\n0 -> 0\n";
        let m = parse_dfao(text).unwrap();
        assert_eq!(m.numeration(), NumerationSystem::fibonacci(Order::Msd));
        assert_eq!(m.next(1, 1), None);
        assert_eq!(m.output(1), HASH);
        assert_eq!(write_dfao(&m), text);
    }

    #[test]
    fn non_numeric_ids_are_renumbered() {
        let text = "a 1\n0 -> b\n1 -> a\n\nb 0\n0 -> b\n1 -> b\n";
        let m = parse_dfao(text).unwrap();
        assert_eq!(m.initial(), 0);
        assert_eq!(m.outputs(), &[1, 0]);
        assert_eq!(m.next(0, 0), Some(1));
    }

    #[test]
    fn initial_state_need_not_be_zero() {
        let text = "msd_2\n\n1 5\n0 -> 1\n1 -> 0\n\n0 6\n0 -> 0\n1 -> 1\n";
        let m = parse_dfao(text).unwrap();
        assert_eq!(m.initial(), 1);
        assert_eq!(m.output(1), 5);
        assert_eq!(parse_dfao(&write_dfao(&m)).unwrap(), m);
    }

    #[test]
    fn morphism_round_trip() {
        let m = UniformMorphism::new(vec![vec![0, 1], vec![0, 0]], vec![1, 0], 0).unwrap();
        let text = write_morphism(&m);
        assert_eq!(text, "morphism\nseed 0\n0 -> 0 1 / 1\n1 -> 0 0 / 0\n");
        assert_eq!(parse_morphism(&text).unwrap(), m);
        assert!(parse_morphism("seed 0\n").is_err());
    }
}
