//! Transduction over numeration systems whose representations form a proper
//! subset of all base-k words (Fibonacci).
//!
//! The partial automaton is completed with a dead state `q_#` that outputs
//! [`HASH`], the transducer is extended to pass `#` through unchanged, the
//! completed automaton is transduced as an ordinary base-k DFAO, and the
//! `#`-states are removed again.

use crate::automaton::{minimize_partial, Dfao};
use crate::dekking::transduce_dfao;
use crate::error::{Error, Result};
use crate::numeration::{Kind, NumerationSystem, Order};
use crate::transducer::Transducer;
use crate::HASH;

/// A complete base-k DFAO whose invalid inputs end in the dead state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtendedDfao {
    pub dfao: Dfao,
    /// Index of `q_#`; `None` when the input was already complete.
    pub dead: Option<usize>,
}

/// A transducer over `Δ ∪ {#}` that leaves its state alone and emits `#`
/// on `#`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtendedTransducer {
    pub transducer: Transducer,
}

/// Completes `m` with a dead state and retags it as base-k msd.
///
/// Complete automata are returned unchanged, without a dead state.
pub fn extend_dfao(m: &Dfao) -> Result<ExtendedDfao> {
    if m.numeration().order != Order::Msd {
        return Err(Error::Invalid(format!(
            "extension needs an msd automaton, got {}",
            m.numeration()
        )));
    }
    if m.is_complete() {
        return Ok(ExtendedDfao {
            dfao: m.clone(),
            dead: None,
        });
    }
    if m.outputs().contains(&HASH) {
        return Err(Error::HashSymbolCollision);
    }
    let dead = m.state_count();
    let k = m.radix();
    let mut next: Vec<Vec<Option<usize>>> = (0..dead)
        .map(|q| {
            m.transitions(q)
                .iter()
                .map(|t| Some(t.unwrap_or(dead)))
                .collect()
        })
        .collect();
    next.push(vec![Some(dead); k]);
    let mut outputs = m.outputs().to_vec();
    outputs.push(HASH);
    let sys = NumerationSystem::msd(m.numeration().radix());
    Ok(ExtendedDfao {
        dfao: Dfao::new(sys, m.initial(), next, outputs)?,
        dead: Some(dead),
    })
}

pub fn extend_transducer(t: &Transducer) -> Result<ExtendedTransducer> {
    if t.symbol_index(HASH).is_some() {
        return Err(Error::HashSymbolCollision);
    }
    let mut alphabet = t.alphabet().to_vec();
    alphabet.push(HASH);
    let rows = (0..t.state_count())
        .map(|v| {
            let mut row: Vec<_> = (0..t.alphabet().len()).map(|i| t.edge(v, i)).collect();
            row.push((v, HASH));
            row
        })
        .collect();
    Ok(ExtendedTransducer {
        transducer: Transducer::new(alphabet, t.initial(), rows)?,
    })
}

fn check_supported(m: &Dfao) -> Result<()> {
    let sys = m.numeration();
    if sys.order != Order::Msd {
        return Err(Error::Invalid(format!(
            "numeration-restricted transduction needs msd input, got {sys}"
        )));
    }
    if !sys.validity().is_prefix_closed() {
        return Err(Error::NotPrefixClosed(sys.to_string()));
    }
    Ok(())
}

/// Transduces the extension of `m` by the extension of `t`: the minimal
/// base-k automaton for `T'(y)`, still containing the `#`-states.
pub fn transduce_extended(m: &Dfao, t: &Transducer) -> Result<Dfao> {
    check_supported(m)?;
    let ext = extend_dfao(m)?;
    let ext_t = extend_transducer(t)?;
    transduce_dfao(&ext.dfao, &ext_t.transducer)
}

/// Removes every state whose output is `#` together with the edges into it.
pub fn strip_dead(m: &Dfao) -> Result<Dfao> {
    if m.output(m.initial()) == HASH {
        return Err(Error::Invalid("initial state outputs #".into()));
    }
    let keep: Vec<usize> = (0..m.state_count())
        .filter(|&q| m.output(q) != HASH)
        .collect();
    let mut index = vec![None; m.state_count()];
    for (i, &q) in keep.iter().enumerate() {
        index[q] = Some(i);
    }
    let next = keep
        .iter()
        .map(|&q| {
            m.transitions(q)
                .iter()
                .map(|t| t.and_then(|t| index[t]))
                .collect()
        })
        .collect();
    let outputs = keep.iter().map(|&q| m.output(q)).collect();
    let initial = index[m.initial()].expect("initial state kept");
    Dfao::new(m.numeration(), initial, next, outputs)
}

/// `T(x)` for a sequence `x` computed over a numeration system with a
/// prefix-closed representation language; the result is over the same
/// system as `m`.
pub fn transduce_numeration(m: &Dfao, t: &Transducer) -> Result<Dfao> {
    check_supported(m)?;
    if matches!(m.numeration().kind, Kind::Base(_)) && m.is_complete() {
        return transduce_dfao(m, t);
    }
    let extended = transduce_extended(m, t)?;
    let stripped = strip_dead(&extended)?.with_numeration(m.numeration())?;
    Ok(minimize_partial(&stripped))
}
