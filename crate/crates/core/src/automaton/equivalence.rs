use std::collections::{HashMap, VecDeque};

use crate::automaton::Dfao;
use crate::error::{Error, Result};
use crate::numeration::Digit;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Equivalence {
    Equivalent,
    /// A shortest input word (in reading order) on which the outputs differ.
    Differ {
        witness: Vec<Digit>,
    },
}

impl Equivalence {
    pub fn is_equivalent(&self) -> bool {
        matches!(self, Equivalence::Equivalent)
    }
}

type Node = (Option<usize>, Option<usize>, usize);

/// Decides whether two automata agree on every representation word of their
/// shared numeration system (leading zeros included).
///
/// For base-k that is every word over the digit alphabet; for Fibonacci the
/// words are restricted to those without factor `11`. A word on which one
/// automaton is undefined and the other is not counts as a difference.
pub fn equivalent(a: &Dfao, b: &Dfao) -> Result<Equivalence> {
    if a.numeration() != b.numeration() {
        return Err(Error::AlphabetMismatch(format!(
            "cannot compare {} with {}",
            a.numeration(),
            b.numeration()
        )));
    }
    let valid = a.numeration().validity();
    let k = a.radix();
    let start: Node = (Some(a.initial()), Some(b.initial()), 0);
    let mut parent: HashMap<Node, Option<(Node, Digit)>> = HashMap::from([(start, None)]);
    let mut queue = VecDeque::from([start]);
    while let Some(node) = queue.pop_front() {
        let (p, q, v) = node;
        if valid.accepting[v] {
            let out_a = p.map(|p| a.output(p));
            let out_b = q.map(|q| b.output(q));
            if out_a != out_b {
                let mut witness = Vec::new();
                let mut cur = node;
                while let Some(Some((prev, d))) = parent.get(&cur) {
                    witness.push(*d);
                    cur = *prev;
                }
                witness.reverse();
                return Ok(Equivalence::Differ { witness });
            }
        } else {
            // rejecting states of the validity acceptor never accept again
            continue;
        }
        for d in 0..k {
            let succ: Node = (
                p.and_then(|p| a.next(p, d as Digit)),
                q.and_then(|q| b.next(q, d as Digit)),
                valid.next[v][d],
            );
            if let std::collections::hash_map::Entry::Vacant(e) = parent.entry(succ) {
                e.insert(Some((node, d as Digit)));
                queue.push_back(succ);
            }
        }
    }
    Ok(Equivalence::Equivalent)
}
