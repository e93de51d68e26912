//! 1-uniform deterministic transducers and their word-level semantics.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::Symbol;

/// A total map on transducer states, `f_y(v) = φ*(v, y)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StateFunction(Vec<usize>);

impl StateFunction {
    pub fn identity(states: usize) -> Self {
        StateFunction((0..states).collect())
    }

    pub fn from_vec(map: Vec<usize>) -> Self {
        StateFunction(map)
    }

    pub fn apply(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `next ∘ self`: first apply `self`, then `next`. With this,
    /// `f_{y1 y2} = f_{y1}.then(f_{y2})`.
    pub fn then(&self, next: &StateFunction) -> StateFunction {
        StateFunction(self.0.iter().map(|&v| next.0[v]).collect())
    }
}

impl fmt::Display for StateFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// `T = ⟨V, Δ, φ, v0, Γ, σ⟩` with φ and σ total on `V × Δ`.
///
/// Input symbols are arbitrary small integers (e.g. `{1, 3, 5, 7}`); the
/// declared alphabet order is kept for serialization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transducer {
    alphabet: Vec<Symbol>,
    initial: usize,
    next: Vec<Vec<usize>>,
    out: Vec<Vec<Symbol>>,
}

impl Transducer {
    /// `transitions[v][i]` is `(φ(v, alphabet[i]), σ(v, alphabet[i]))`.
    pub fn new(
        alphabet: Vec<Symbol>,
        initial: usize,
        transitions: Vec<Vec<(usize, Symbol)>>,
    ) -> Result<Self> {
        let n = transitions.len();
        if n == 0 {
            return Err(Error::Invalid("transducer has no states".into()));
        }
        if alphabet.is_empty() {
            return Err(Error::Invalid(
                "transducer has an empty input alphabet".into(),
            ));
        }
        let distinct: BTreeSet<_> = alphabet.iter().collect();
        if distinct.len() != alphabet.len() {
            return Err(Error::Invalid("input alphabet lists a symbol twice".into()));
        }
        if initial >= n {
            return Err(Error::Invalid(format!(
                "initial state {initial} does not exist"
            )));
        }
        let mut next = Vec::with_capacity(n);
        let mut out = Vec::with_capacity(n);
        for (v, row) in transitions.into_iter().enumerate() {
            if row.len() != alphabet.len() {
                let symbol = alphabet.get(row.len()).copied().unwrap_or_default();
                return Err(Error::MissingTransition {
                    state: v.to_string(),
                    symbol,
                });
            }
            if let Some(&(t, _)) = row.iter().find(|(t, _)| *t >= n) {
                return Err(Error::Invalid(format!(
                    "transition target {t} does not exist"
                )));
            }
            next.push(row.iter().map(|&(t, _)| t).collect());
            out.push(row.iter().map(|&(_, o)| o).collect());
        }
        Ok(Transducer {
            alphabet,
            initial,
            next,
            out,
        })
    }

    pub fn alphabet(&self) -> &[Symbol] {
        &self.alphabet
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn state_count(&self) -> usize {
        self.next.len()
    }

    pub fn symbol_index(&self, symbol: Symbol) -> Option<usize> {
        self.alphabet.iter().position(|&s| s == symbol)
    }

    /// `(φ(v, a), σ(v, a))` for the alphabet entry at `index`.
    pub fn edge(&self, state: usize, index: usize) -> (usize, Symbol) {
        (self.next[state][index], self.out[state][index])
    }

    pub fn step(&self, state: usize, symbol: Symbol) -> Result<(usize, Symbol)> {
        let i = self
            .symbol_index(symbol)
            .ok_or(Error::SymbolOutsideAlphabet(symbol))?;
        Ok(self.edge(state, i))
    }

    pub fn output_alphabet(&self) -> BTreeSet<Symbol> {
        self.out.iter().flatten().copied().collect()
    }

    /// Output word: the i-th symbol is `σ(φ*(v0, w[..i]), w[i])`.
    pub fn transduce(&self, w: &[Symbol]) -> Result<Vec<Symbol>> {
        let mut v = self.initial;
        w.iter()
            .map(|&a| {
                let (t, o) = self.step(v, a)?;
                v = t;
                Ok(o)
            })
            .collect()
    }

    /// The state map induced by a single alphabet entry.
    pub fn letter_function(&self, index: usize) -> StateFunction {
        StateFunction(self.next.iter().map(|row| row[index]).collect())
    }

    pub fn state_function(&self, y: &[Symbol]) -> Result<StateFunction> {
        let mut f = StateFunction::identity(self.state_count());
        for &a in y {
            let i = self
                .symbol_index(a)
                .ok_or(Error::SymbolOutsideAlphabet(a))?;
            f = f.then(&self.letter_function(i));
        }
        Ok(f)
    }
}

pub fn transduce_word(t: &Transducer, w: &[Symbol]) -> Result<Vec<Symbol>> {
    t.transduce(w)
}

pub fn state_function(t: &Transducer, y: &[Symbol]) -> Result<StateFunction> {
    t.state_function(y)
}

/// The transducer that copies its input, over `alphabet`.
pub fn identity_transducer(alphabet: &[Symbol]) -> Transducer {
    let row = alphabet.iter().map(|&a| (0, a)).collect();
    Transducer::new(alphabet.to_vec(), 0, vec![row]).expect("identity transducer is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn runsum2() -> Transducer {
        Transducer::new(
            vec![0, 1],
            0,
            vec![vec![(0, 0), (1, 1)], vec![(1, 1), (0, 0)]],
        )
        .unwrap()
    }

    fn runprod1357() -> Transducer {
        // state i holds the running product 1, 3, 5, 7
        let values = [1u32, 3, 5, 7];
        let rows = values
            .iter()
            .map(|&p| {
                values
                    .iter()
                    .map(|&a| {
                        let r = p * a % 8;
                        (values.iter().position(|&x| x == r).unwrap(), r)
                    })
                    .collect()
            })
            .collect();
        Transducer::new(values.to_vec(), 0, rows).unwrap()
    }

    fn bits(s: &str) -> Vec<Symbol> {
        s.chars().map(|c| c.to_digit(10).unwrap()).collect()
    }

    #[test]
    fn running_sum_examples() {
        let t = runsum2();
        assert_eq!(
            t.transduce(&bits("0110100110010110")).unwrap(),
            bits("0100111011100100")
        );
        assert_eq!(t.transduce(&bits("10111010")).unwrap(), bits("11010011"));
        assert!(t.transduce(&[]).unwrap().is_empty());
        assert_eq!(t.transduce(&[2]), Err(Error::SymbolOutsideAlphabet(2)));
    }

    #[test]
    fn running_product_example() {
        assert_eq!(
            runprod1357().transduce(&[1, 3, 5, 7]).unwrap(),
            vec![1, 3, 7, 1]
        );
        assert!(runprod1357().transduce(&[2]).is_err());
    }

    #[test]
    fn runsum_state_functions() {
        let t = runsum2();
        assert!(t.state_function(&[0]).unwrap().is_identity());
        assert_eq!(t.state_function(&[1]).unwrap().as_slice(), &[1, 0]);
        assert!(t.state_function(&[]).unwrap().is_identity());
    }

    #[test]
    fn rejects_non_total_tables() {
        assert!(matches!(
            Transducer::new(vec![0, 1], 0, vec![vec![(0, 0)]]),
            Err(Error::MissingTransition { .. })
        ));
        assert!(Transducer::new(vec![0, 0], 0, vec![vec![(0, 0), (0, 0)]]).is_err());
        assert!(Transducer::new(vec![0], 0, vec![vec![(4, 0)]]).is_err());
    }

    #[test]
    fn identity_copies() {
        let id = identity_transducer(&[1, 3, 5, 7]);
        assert_eq!(id.transduce(&[7, 1, 3]).unwrap(), vec![7, 1, 3]);
    }

    proptest! {
        #[test]
        fn composition_law(u in prop::collection::vec(0u32..2, 0..20), v in prop::collection::vec(0u32..2, 0..20)) {
            let t = Transducer::new(
                vec![0, 1],
                0,
                vec![vec![(1, 0), (2, 1)], vec![(0, 1), (1, 1)], vec![(2, 0), (0, 0)]],
            ).unwrap();
            let uv: Vec<_> = u.iter().chain(&v).copied().collect();
            let fu = t.state_function(&u).unwrap();
            let fv = t.state_function(&v).unwrap();
            prop_assert_eq!(t.state_function(&uv).unwrap(), fu.then(&fv));
            let out_u = t.transduce(&u).unwrap();
            let out_uv = t.transduce(&uv).unwrap();
            prop_assert_eq!(&out_uv[..u.len()], &out_u[..]);
            prop_assert_eq!(out_uv.len(), uv.len());
        }

        #[test]
        fn runsum_is_prefix_parity(w in prop::collection::vec(0u32..2, 0..=64)) {
            let out = runsum2().transduce(&w).unwrap();
            let mut acc = 0;
            for (i, &a) in w.iter().enumerate() {
                acc = (acc + a) % 2;
                prop_assert_eq!(out[i], acc);
            }
        }

        #[test]
        fn runprod_is_prefix_product(w in prop::collection::vec(prop::sample::select(vec![1u32, 3, 5, 7]), 0..=64)) {
            let out = runprod1357().transduce(&w).unwrap();
            let mut acc = 1;
            for (i, &a) in w.iter().enumerate() {
                acc = acc * a % 8;
                prop_assert_eq!(out[i], acc);
            }
        }
    }
}
