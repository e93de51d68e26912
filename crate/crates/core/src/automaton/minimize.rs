use std::collections::HashMap;

use crate::automaton::Dfao;
use crate::error::Result;

/// Minimal complete DFAO with the same behaviour on every input word.
///
/// Moore partition refinement seeded by outputs; the result is renumbered
/// canonically (BFS from the initial state, digits ascending).
pub fn minimize(m: &Dfao) -> Result<Dfao> {
    m.ensure_complete()?;
    Ok(minimize_partial(m))
}

/// Minimization that also accepts partial automata. Missing transitions are
/// routed to a virtual sink whose output differs from every real output; the
/// sink is dropped again from the quotient.
pub(crate) fn minimize_partial(m: &Dfao) -> Dfao {
    let m = m.canonicalize();
    let n = m.state_count();
    let k = m.radix();
    let sink = n;
    let target = |s: usize, d: usize| -> usize {
        if s == sink {
            sink
        } else {
            m.next[s][d].unwrap_or(sink)
        }
    };

    let mut ids: HashMap<Option<u32>, usize> = HashMap::new();
    let mut block: Vec<usize> = (0..=n)
        .map(|s| {
            let key = (s != sink).then(|| m.outputs[s]);
            let fresh = ids.len();
            *ids.entry(key).or_insert(fresh)
        })
        .collect();
    let mut count = ids.len();

    loop {
        let mut sigs: HashMap<(usize, Vec<usize>), usize> = HashMap::new();
        let refined: Vec<usize> = (0..=n)
            .map(|s| {
                let sig = (block[s], (0..k).map(|d| block[target(s, d)]).collect());
                let fresh = sigs.len();
                *sigs.entry(sig).or_insert(fresh)
            })
            .collect();
        let refined_count = sigs.len();
        block = refined;
        if refined_count == count {
            break;
        }
        count = refined_count;
    }

    let sink_block = block[sink];
    let mut rep = vec![usize::MAX; count];
    for s in 0..n {
        if rep[block[s]] == usize::MAX {
            rep[block[s]] = s;
        }
    }
    // Blocks are renumbered to skip the sink's block.
    let remap = |b: usize| if b < sink_block { b } else { b - 1 };
    let mut next = Vec::with_capacity(count - 1);
    let mut outputs = Vec::with_capacity(count - 1);
    for (b, &r) in rep.iter().enumerate() {
        if b == sink_block {
            continue;
        }
        next.push(
            (0..k)
                .map(|d| {
                    let t = block[target(r, d)];
                    (t != sink_block).then(|| remap(t))
                })
                .collect(),
        );
        outputs.push(m.outputs[r]);
    }
    Dfao {
        numeration: m.numeration,
        initial: remap(block[m.initial]),
        next,
        outputs,
    }
    .canonicalize()
}
