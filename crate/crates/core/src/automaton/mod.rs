//! Deterministic finite automata with output (DFAOs) and the algebra over
//! them: morphism conversions, minimization, reversal, products and
//! equivalence.

mod combine;
mod equivalence;
mod minimize;
mod morphism;
mod reverse;

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::numeration::{Digit, NumerationSystem};
use crate::Symbol;

pub use combine::{combine, map_outputs};
pub use equivalence::{equivalent, Equivalence};
pub use minimize::minimize;
pub(crate) use minimize::minimize_partial;
pub use morphism::{from_morphism, prefix, to_morphism, UniformMorphism};
pub use reverse::{reverse, reverse_unminimized};

/// A DFAO over the digit alphabet of its numeration system.
///
/// Transitions may be partial (numeration-restricted automata such as the
/// Fibonacci ones); every state carries an output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dfao {
    numeration: NumerationSystem,
    initial: usize,
    next: Vec<Vec<Option<usize>>>,
    outputs: Vec<Symbol>,
}

impl Dfao {
    pub fn new(
        numeration: NumerationSystem,
        initial: usize,
        next: Vec<Vec<Option<usize>>>,
        outputs: Vec<Symbol>,
    ) -> Result<Self> {
        let n = outputs.len();
        if n == 0 {
            return Err(Error::Invalid("automaton has no states".into()));
        }
        if next.len() != n {
            return Err(Error::Invalid(format!(
                "{} transition rows for {} states",
                next.len(),
                n
            )));
        }
        if initial >= n {
            return Err(Error::Invalid(format!(
                "initial state {initial} does not exist"
            )));
        }
        let k = numeration.radix() as usize;
        for (q, row) in next.iter().enumerate() {
            if row.len() != k {
                return Err(Error::Invalid(format!(
                    "state {q} has {} transition slots, expected {k}",
                    row.len()
                )));
            }
            if let Some(t) = row.iter().flatten().find(|&&t| t >= n) {
                return Err(Error::Invalid(format!(
                    "transition target {t} does not exist"
                )));
            }
        }
        Ok(Dfao {
            numeration,
            initial,
            next,
            outputs,
        })
    }

    /// Builds a complete DFAO from a total transition table.
    pub fn from_table(
        numeration: NumerationSystem,
        initial: usize,
        table: Vec<Vec<usize>>,
        outputs: Vec<Symbol>,
    ) -> Result<Self> {
        let next = table
            .into_iter()
            .map(|row| row.into_iter().map(Some).collect())
            .collect();
        Self::new(numeration, initial, next, outputs)
    }

    pub fn numeration(&self) -> NumerationSystem {
        self.numeration
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn state_count(&self) -> usize {
        self.outputs.len()
    }

    pub fn radix(&self) -> usize {
        self.numeration.radix() as usize
    }

    pub fn output(&self, state: usize) -> Symbol {
        self.outputs[state]
    }

    pub fn outputs(&self) -> &[Symbol] {
        &self.outputs
    }

    pub fn next(&self, state: usize, digit: Digit) -> Option<usize> {
        self.next[state].get(digit as usize).copied().flatten()
    }

    pub fn transitions(&self, state: usize) -> &[Option<usize>] {
        &self.next[state]
    }

    pub fn output_alphabet(&self) -> BTreeSet<Symbol> {
        self.outputs.iter().copied().collect()
    }

    pub fn is_complete(&self) -> bool {
        self.next.iter().all(|row| row.iter().all(Option::is_some))
    }

    pub fn ensure_complete(&self) -> Result<()> {
        for (q, row) in self.next.iter().enumerate() {
            if let Some(d) = row.iter().position(Option::is_none) {
                return Err(Error::IncompleteAutomaton {
                    state: q,
                    digit: d as Digit,
                });
            }
        }
        Ok(())
    }

    /// Total transition for complete automata.
    pub(crate) fn step(&self, state: usize, digit: usize) -> usize {
        self.next[state][digit].expect("complete automaton")
    }

    /// Same table under a different numeration tag with the same radix.
    pub fn with_numeration(mut self, numeration: NumerationSystem) -> Result<Self> {
        if numeration.radix() != self.numeration.radix() {
            return Err(Error::AlphabetMismatch(format!(
                "cannot retag a {} automaton as {numeration}",
                self.numeration
            )));
        }
        self.numeration = numeration;
        Ok(self)
    }

    /// State reached from the initial state on `digits` (read left to right).
    pub fn run(&self, digits: &[Digit]) -> Result<usize> {
        let mut q = self.initial;
        for &d in digits {
            if d as usize >= self.radix() {
                return Err(Error::InvalidDigit {
                    digit: d,
                    system: self.numeration.to_string(),
                });
            }
            q = self
                .next(q, d)
                .ok_or(Error::UndefinedTransition { state: q, digit: d })?;
        }
        Ok(q)
    }

    pub fn eval_word(&self, digits: &[Digit]) -> Result<Symbol> {
        self.run(digits).map(|q| self.outputs[q])
    }

    /// The `n`-th term of the computed sequence: the output reached on the
    /// canonical representation of `n`, in the automaton's digit order.
    pub fn eval(&self, n: u64) -> Result<Symbol> {
        self.eval_word(&self.numeration.digits(n))
    }

    /// The first `len` terms of the computed sequence.
    pub fn sequence_prefix(&self, len: usize) -> Result<Vec<Symbol>> {
        (0..len as u64).map(|n| self.eval(n)).collect()
    }

    /// Keeps the states reachable from the initial state and renumbers them
    /// in breadth-first order, digits ascending.
    pub fn canonicalize(&self) -> Dfao {
        let n = self.state_count();
        let mut index = vec![usize::MAX; n];
        let mut order = Vec::with_capacity(n);
        let mut queue = VecDeque::new();
        index[self.initial] = 0;
        order.push(self.initial);
        queue.push_back(self.initial);
        while let Some(q) = queue.pop_front() {
            for t in self.next[q].iter().flatten() {
                if index[*t] == usize::MAX {
                    index[*t] = order.len();
                    order.push(*t);
                    queue.push_back(*t);
                }
            }
        }
        let next = order
            .iter()
            .map(|&q| self.next[q].iter().map(|t| t.map(|t| index[t])).collect())
            .collect();
        let outputs = order.iter().map(|&q| self.outputs[q]).collect();
        Dfao {
            numeration: self.numeration,
            initial: 0,
            next,
            outputs,
        }
    }

    /// An equivalent automaton whose initial state loops on digit 0, so that
    /// leading zeros (msd) never change the output. Returns `self` unchanged
    /// when that already holds.
    pub fn with_zero_loop_initial(&self) -> Dfao {
        if self.next(self.initial, 0) == Some(self.initial) {
            return self.clone();
        }
        let fresh = self.state_count();
        let mut next = self.next.clone();
        let mut row = self.next[self.initial].clone();
        row[0] = Some(fresh);
        next.push(row);
        let mut outputs = self.outputs.clone();
        outputs.push(self.outputs[self.initial]);
        Dfao {
            numeration: self.numeration,
            initial: fresh,
            next,
            outputs,
        }
    }
}

/// `n`-th term of the sequence computed by `m`.
pub fn eval(m: &Dfao, n: u64) -> Result<Symbol> {
    m.eval(n)
}
