use std::collections::{HashMap, VecDeque};

use crate::automaton::{minimize_partial, Dfao};
use crate::error::{Error, Result};
use crate::Symbol;

/// Product automaton whose output on a joint state is `f` applied to the
/// component outputs, minimized.
///
/// Partial components are allowed: the product is undefined wherever some
/// component is.
pub fn combine<F>(ms: &[&Dfao], f: F) -> Result<Dfao>
where
    F: Fn(&[Symbol]) -> Symbol,
{
    let first = ms
        .first()
        .ok_or_else(|| Error::Invalid("combine needs at least one automaton".into()))?;
    let sys = first.numeration();
    if let Some(other) = ms.iter().find(|m| m.numeration() != sys) {
        return Err(Error::AlphabetMismatch(format!(
            "cannot combine {sys} with {}",
            other.numeration()
        )));
    }
    let k = first.radix();

    let start: Vec<usize> = ms.iter().map(|m| m.initial()).collect();
    let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(start.clone(), 0)]);
    let mut tuples = vec![start];
    let mut next = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let mut row = Vec::with_capacity(k);
        for d in 0..k {
            let target: Option<Vec<usize>> = ms
                .iter()
                .zip(&tuples[i])
                .map(|(m, &q)| m.next(q, d as u32))
                .collect();
            row.push(target.map(|t| match index.get(&t) {
                Some(&j) => j,
                None => {
                    let j = tuples.len();
                    index.insert(t.clone(), j);
                    tuples.push(t);
                    queue.push_back(j);
                    j
                }
            }));
        }
        next.push(row);
    }
    let outputs = tuples
        .iter()
        .map(|t| {
            let outs: Vec<Symbol> = ms.iter().zip(t).map(|(m, &q)| m.output(q)).collect();
            f(&outs)
        })
        .collect();
    Ok(minimize_partial(&Dfao::new(sys, 0, next, outputs)?))
}

/// Relabels every state output with `f`; transitions are untouched.
pub fn map_outputs<F>(m: &Dfao, f: F) -> Dfao
where
    F: Fn(Symbol) -> Symbol,
{
    let mut out = m.clone();
    for o in &mut out.outputs {
        *o = f(*o);
    }
    out
}
