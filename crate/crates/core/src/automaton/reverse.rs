use std::collections::{HashMap, VecDeque};

use crate::automaton::{minimize_partial, Dfao};
use crate::error::Result;
use crate::Symbol;

/// DFAO computing `w ↦ f(wᴿ)` where `f` is computed by `m`; the digit order
/// tag is flipped, so an msd automaton becomes lsd and vice versa.
pub fn reverse(m: &Dfao) -> Result<Dfao> {
    Ok(minimize_partial(&reverse_unminimized(m)?))
}

/// The reachable part of the reversal construction before minimization.
///
/// States are total maps `Q → Δ`: reading `w` leads to `q ↦ λ(δ(q, wᴿ))`.
pub fn reverse_unminimized(m: &Dfao) -> Result<Dfao> {
    m.ensure_complete()?;
    let n = m.state_count();
    let k = m.radix();

    let start: Vec<Symbol> = m.outputs.clone();
    let mut index: HashMap<Vec<Symbol>, usize> = HashMap::new();
    let mut maps = vec![start.clone()];
    index.insert(start, 0);
    let mut next: Vec<Vec<Option<usize>>> = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let mut row = Vec::with_capacity(k);
        for d in 0..k {
            let g: Vec<Symbol> = (0..n).map(|q| maps[i][m.step(q, d)]).collect();
            let j = match index.get(&g) {
                Some(&j) => j,
                None => {
                    let j = maps.len();
                    index.insert(g.clone(), j);
                    maps.push(g);
                    queue.push_back(j);
                    j
                }
            };
            row.push(Some(j));
        }
        next.push(row);
    }
    let outputs = maps.iter().map(|g| g[m.initial]).collect();
    Dfao::new(m.numeration.flipped(), 0, next, outputs)
}
