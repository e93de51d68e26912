//! Transduction of k-automatic sequences.
//!
//! Given a DFAO `M` (viewed as a k-uniform morphism `h` with coding `λ`) and
//! a transducer `T`, the states of the result are pairs `(a, I(w))` where
//! `I(w)` lists the state maps `f_{λ(w)}, f_{λ(h(w))}, …, f_{λ(h^{p+r−1}(w))}`.
//! The period `p` and preperiod `r` come from the orbit of the per-letter
//! state maps under `h`; only states reachable from `(q0, I(ε))` are built.

use std::collections::{HashMap, VecDeque};

use crate::automaton::{minimize, reverse, to_morphism, Dfao, UniformMorphism};
use crate::error::{Error, Result};
use crate::numeration::{Digit, Kind, Order};
use crate::transducer::{StateFunction, Transducer};
use crate::Symbol;

/// Period and preperiod of the orbit of per-letter state maps.
///
/// For every letter `q` and `i >= preperiod`,
/// `f_{λ(h^{i+period}(q))} = f_{λ(h^i(q))}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrbitResult {
    pub period: usize,
    pub preperiod: usize,
}

impl OrbitResult {
    /// Length of every signature, `p + r`.
    pub fn signature_len(&self) -> usize {
        self.period + self.preperiod
    }
}

pub type Signature = Vec<StateFunction>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DekkingState {
    pub letter: usize,
    pub signature: Signature,
}

/// Output of the reachable-state construction before minimization.
#[derive(Clone, Debug)]
pub struct Construction {
    pub orbit: OrbitResult,
    /// The morphism the construction ran on (the input automaton, with a
    /// fresh zero-looping initial state when the original one lacked it).
    pub morphism: UniformMorphism,
    /// Raw states in breadth-first order; state `i` of `raw` is `states[i]`.
    pub states: Vec<DekkingState>,
    /// Shortest msd digit word reaching each raw state.
    pub access: Vec<Vec<Digit>>,
    pub raw: Dfao,
}

type FnId = usize;
type SigId = usize;

/// Hash-consed state maps with memoized composition.
struct FnTable {
    fns: Vec<StateFunction>,
    index: HashMap<StateFunction, FnId>,
    then_cache: HashMap<(FnId, FnId), FnId>,
}

impl FnTable {
    fn new(states: usize) -> Self {
        let mut table = FnTable {
            fns: Vec::new(),
            index: HashMap::new(),
            then_cache: HashMap::new(),
        };
        table.intern(StateFunction::identity(states));
        table
    }

    const IDENTITY: FnId = 0;

    fn intern(&mut self, f: StateFunction) -> FnId {
        if let Some(&id) = self.index.get(&f) {
            return id;
        }
        let id = self.fns.len();
        self.index.insert(f.clone(), id);
        self.fns.push(f);
        id
    }

    fn then(&mut self, first: FnId, second: FnId) -> FnId {
        if first == Self::IDENTITY {
            return second;
        }
        if second == Self::IDENTITY {
            return first;
        }
        if let Some(&id) = self.then_cache.get(&(first, second)) {
            return id;
        }
        let f = self.fns[first].then(&self.fns[second]);
        let id = self.intern(f);
        self.then_cache.insert((first, second), id);
        id
    }
}

/// Positions of the morphism's coding inside the transducer alphabet.
fn coding_indices(m: &UniformMorphism, t: &Transducer) -> Result<Vec<usize>> {
    m.coding()
        .iter()
        .map(|&s| {
            t.symbol_index(s).ok_or_else(|| {
                Error::AlphabetMismatch(format!(
                    "output symbol {} is not in the transducer input alphabet",
                    crate::symbol_to_string(s)
                ))
            })
        })
        .collect()
}

/// Rows `F_n[q] = f_{λ(h^n(q))}` of the orbit, plus the detected `(p, r)`.
struct Orbit {
    result: OrbitResult,
    rows: Vec<Vec<FnId>>,
}

fn next_row(m: &UniformMorphism, fns: &mut FnTable, row: &[FnId]) -> Vec<FnId> {
    (0..m.alphabet_size())
        .map(|q| {
            m.image(q)
                .iter()
                .fold(FnTable::IDENTITY, |acc, &c| fns.then(acc, row[c]))
        })
        .collect()
}

fn first_row(m: &UniformMorphism, t: &Transducer, fns: &mut FnTable) -> Result<Vec<FnId>> {
    Ok(coding_indices(m, t)?
        .into_iter()
        .map(|i| fns.intern(t.letter_function(i)))
        .collect())
}

/// Upper bound `|V|^{|Q|·|V|}` on period and preperiod, as a float.
pub fn orbit_bound(letters: usize, transducer_states: usize) -> f64 {
    (transducer_states as f64).powf((letters * transducer_states) as f64)
}

fn detect_orbit(m: &UniformMorphism, t: &Transducer, fns: &mut FnTable) -> Result<Orbit> {
    let mut rows = vec![first_row(m, t, fns)?];
    let mut seen: HashMap<Vec<FnId>, usize> = HashMap::new();
    let mut n = 1;
    loop {
        let row = next_row(m, fns, &rows[n - 1]);
        if let Some(&l) = seen.get(&row) {
            let result = OrbitResult {
                period: n - l,
                preperiod: l,
            };
            let bound = orbit_bound(m.alphabet_size(), t.state_count());
            debug_assert!(result.period as f64 <= bound && result.preperiod as f64 <= bound);
            return Ok(Orbit { result, rows });
        }
        seen.insert(row.clone(), n);
        rows.push(row);
        n += 1;
    }
}

/// Finds `(p, r)` by hashing the orbit tuples for `n = 1, 2, …` until one
/// repeats.
pub fn find_period_preperiod(m: &UniformMorphism, t: &Transducer) -> Result<OrbitResult> {
    let mut fns = FnTable::new(t.state_count());
    Ok(detect_orbit(m, t, &mut fns)?.result)
}

/// `I(w)` computed by folding the per-letter orbit rows over `w`.
pub fn signature_of(
    m: &UniformMorphism,
    t: &Transducer,
    orbit: &OrbitResult,
    w: &[usize],
) -> Result<Signature> {
    let mut fns = FnTable::new(t.state_count());
    let mut rows = vec![first_row(m, t, &mut fns)?];
    while rows.len() < orbit.signature_len() {
        let row = next_row(m, &mut fns, rows.last().expect("non-empty"));
        rows.push(row);
    }
    Ok((0..orbit.signature_len())
        .map(|i| {
            let id = w
                .iter()
                .fold(FnTable::IDENTITY, |acc, &q| fns.then(acc, rows[i][q]));
            fns.fns[id].clone()
        })
        .collect())
}

struct SigTable {
    sigs: Vec<Vec<FnId>>,
    index: HashMap<Vec<FnId>, SigId>,
    shift_cache: HashMap<SigId, SigId>,
    append_cache: HashMap<(SigId, usize), SigId>,
}

impl SigTable {
    fn intern(&mut self, sig: Vec<FnId>) -> SigId {
        if let Some(&id) = self.index.get(&sig) {
            return id;
        }
        let id = self.sigs.len();
        self.index.insert(sig.clone(), id);
        self.sigs.push(sig);
        id
    }

    /// `I(w) ↦ I(h(w))`: shift left, refilling the last slot from index `r`.
    fn shift(&mut self, id: SigId, preperiod: usize) -> SigId {
        if let Some(&s) = self.shift_cache.get(&id) {
            return s;
        }
        let sig = &self.sigs[id];
        let mut shifted: Vec<FnId> = sig[1..].to_vec();
        shifted.push(sig[preperiod]);
        let s = self.intern(shifted);
        self.shift_cache.insert(id, s);
        s
    }

    /// `I(w) ↦ I(w q)` given the per-letter signature of `q`.
    fn append(
        &mut self,
        id: SigId,
        letter: usize,
        letter_sig: &[FnId],
        fns: &mut FnTable,
    ) -> SigId {
        if let Some(&s) = self.append_cache.get(&(id, letter)) {
            return s;
        }
        let joined: Vec<FnId> = self.sigs[id]
            .iter()
            .zip(letter_sig)
            .map(|(&a, &b)| fns.then(a, b))
            .collect();
        let s = self.intern(joined);
        self.append_cache.insert((id, letter), s);
        s
    }
}

/// Breadth-first construction of the reachable states `(a, I(w))`.
pub fn construct(m: &Dfao, t: &Transducer) -> Result<Construction> {
    let sys = m.numeration();
    if !matches!(sys.kind, Kind::Base(_)) || sys.order != Order::Msd {
        return Err(Error::Invalid(format!(
            "transduction needs a base-k msd automaton, got {sys}"
        )));
    }
    m.ensure_complete()?;
    let morphism = to_morphism(&m.with_zero_loop_initial())?;
    let letter_index = coding_indices(&morphism, t)?;

    let mut fns = FnTable::new(t.state_count());
    let orbit = detect_orbit(&morphism, t, &mut fns)?;
    let len = orbit.result.signature_len();
    let preperiod = orbit.result.preperiod;
    let letters = morphism.alphabet_size();
    let letter_sigs: Vec<Vec<FnId>> = (0..letters)
        .map(|q| (0..len).map(|i| orbit.rows[i][q]).collect())
        .collect();

    let mut sigs = SigTable {
        sigs: Vec::new(),
        index: HashMap::new(),
        shift_cache: HashMap::new(),
        append_cache: HashMap::new(),
    };
    let empty = sigs.intern(vec![FnTable::IDENTITY; len]);

    let start = (morphism.seed(), empty);
    let mut index: HashMap<(usize, SigId), usize> = HashMap::from([(start, 0)]);
    let mut order = vec![start];
    let mut access: Vec<Vec<Digit>> = vec![Vec::new()];
    let mut next: Vec<Vec<Option<usize>>> = Vec::new();
    let mut outputs: Vec<Symbol> = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    let v0 = t.initial();
    while let Some(i) = queue.pop_front() {
        let (a, sig) = order[i];
        let reached = fns.fns[sigs.sigs[sig][0]].apply(v0);
        outputs.push(t.edge(reached, letter_index[a]).1);

        let mut prefix_sig = sigs.shift(sig, preperiod);
        let mut row = Vec::with_capacity(morphism.k());
        for (d, &child) in morphism.image(a).iter().enumerate() {
            let target = (child, prefix_sig);
            let j = match index.get(&target) {
                Some(&j) => j,
                None => {
                    let j = order.len();
                    index.insert(target, j);
                    order.push(target);
                    let mut path = access[i].clone();
                    path.push(d as Digit);
                    access.push(path);
                    queue.push_back(j);
                    j
                }
            };
            row.push(Some(j));
            prefix_sig = sigs.append(prefix_sig, child, &letter_sigs[child], &mut fns);
        }
        next.push(row);
    }

    let states = order
        .iter()
        .map(|&(letter, sig)| DekkingState {
            letter,
            signature: sigs.sigs[sig].iter().map(|&f| fns.fns[f].clone()).collect(),
        })
        .collect();
    let raw = Dfao::new(sys, 0, next, outputs)?;
    Ok(Construction {
        orbit: orbit.result,
        morphism,
        states,
        access,
        raw,
    })
}

/// Minimal DFAO for `T(x)`, where `x` is the sequence computed by `m`.
pub fn transduce_dfao(m: &Dfao, t: &Transducer) -> Result<Dfao> {
    minimize(&construct(m, t)?.raw)
}

/// Transduction of an lsd automaton: reverse to msd, transduce, reverse back.
pub fn transduce_lsd(m: &Dfao, t: &Transducer) -> Result<Dfao> {
    if m.numeration().order != Order::Lsd {
        return Err(Error::Invalid(format!(
            "lsd transduction needs an lsd automaton, got {}",
            m.numeration()
        )));
    }
    let forward = reverse(m)?;
    reverse(&transduce_dfao(&forward, t)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::{from_morphism, prefix};
    use crate::numeration::NumerationSystem;
    use crate::transducer::identity_transducer;

    fn runsum2() -> Transducer {
        Transducer::new(
            vec![0, 1],
            0,
            vec![vec![(0, 0), (1, 1)], vec![(1, 1), (0, 0)]],
        )
        .unwrap()
    }

    fn thue_morse() -> UniformMorphism {
        UniformMorphism::uncoded(vec![vec![0, 1], vec![1, 0]], 0).unwrap()
    }

    fn period_doubling() -> UniformMorphism {
        UniformMorphism::new(vec![vec![0, 1], vec![0, 0]], vec![1, 0], 0).unwrap()
    }

    /// Independent orbit oracle: expands `h^n(q)` literally and searches for
    /// the first `n >= 1` whose tuple reappears later.
    fn brute_orbit(m: &UniformMorphism, t: &Transducer, depth: usize) -> OrbitResult {
        let mut words: Vec<Vec<usize>> = (0..m.alphabet_size()).map(|q| vec![q]).collect();
        let mut tuples = Vec::new();
        for _ in 0..depth {
            tuples.push(
                words
                    .iter()
                    .map(|w| {
                        let coded: Vec<Symbol> = w.iter().map(|&q| m.coding()[q]).collect();
                        t.state_function(&coded).unwrap()
                    })
                    .collect::<Vec<_>>(),
            );
            words = words.iter().map(|w| m.apply(w)).collect();
        }
        for n in 2..depth {
            if let Some(l) = (1..n).find(|&l| tuples[l] == tuples[n]) {
                return OrbitResult {
                    period: n - l,
                    preperiod: l,
                };
            }
        }
        panic!("orbit did not repeat within depth {depth}");
    }

    #[test]
    fn thue_morse_runsum_orbit() {
        let got = find_period_preperiod(&thue_morse(), &runsum2()).unwrap();
        assert_eq!(
            got,
            OrbitResult {
                period: 1,
                preperiod: 2
            }
        );
        assert_eq!(got, brute_orbit(&thue_morse(), &runsum2(), 10));
    }

    #[test]
    fn period_doubling_runsum_orbit() {
        let got = find_period_preperiod(&period_doubling(), &runsum2()).unwrap();
        assert_eq!(got, brute_orbit(&period_doubling(), &runsum2(), 10));
    }

    #[test]
    fn one_state_transducer_has_period_one() {
        let id = identity_transducer(&[0, 1]);
        assert_eq!(find_period_preperiod(&thue_morse(), &id).unwrap().period, 1);
    }

    #[test]
    fn coding_outside_alphabet() {
        let t = Transducer::new(vec![1, 3], 0, vec![vec![(0, 1), (0, 3)]]).unwrap();
        assert!(matches!(
            find_period_preperiod(&thue_morse(), &t),
            Err(Error::AlphabetMismatch(_))
        ));
    }

    #[test]
    fn signatures_of_small_words() {
        let (m, t) = (thue_morse(), runsum2());
        let orbit = find_period_preperiod(&m, &t).unwrap();
        let empty = signature_of(&m, &t, &orbit, &[]).unwrap();
        assert_eq!(empty.len(), 3);
        assert!(empty.iter().all(StateFunction::is_identity));
        // h^0(1) = 1 → swap; h(1) = 10 → swap; h^2(1) = 1001 → identity
        let one = signature_of(&m, &t, &orbit, &[1]).unwrap();
        let swap = StateFunction::from_vec(vec![1, 0]);
        let id = StateFunction::identity(2);
        assert_eq!(one, vec![swap.clone(), swap, id]);
    }

    #[test]
    fn thue_morse_running_sum_has_eight_states() {
        let tm = from_morphism(&thue_morse()).unwrap();
        let tsum1 = transduce_dfao(&tm, &runsum2()).unwrap();
        assert_eq!(tsum1.state_count(), 8);
        let expected = runsum2().transduce(&prefix(&thue_morse(), 4096)).unwrap();
        assert_eq!(tsum1.sequence_prefix(4096).unwrap(), expected);
    }

    #[test]
    fn period_doubling_runsum_is_shifted_thue_morse() {
        let pd = from_morphism(&period_doubling()).unwrap();
        let out = transduce_dfao(&pd, &runsum2()).unwrap();
        let t = prefix(&thue_morse(), 1025);
        for n in 0..1024 {
            assert_eq!(out.eval(n as u64).unwrap(), t[n + 1]);
        }
    }

    #[test]
    fn rejects_lsd_and_partial() {
        let tm = from_morphism(&thue_morse()).unwrap();
        let lsd = tm
            .clone()
            .with_numeration(NumerationSystem::lsd(2))
            .unwrap();
        assert!(transduce_dfao(&lsd, &runsum2()).is_err());
        assert!(transduce_lsd(&tm, &runsum2()).is_err());
    }

    #[test]
    fn handles_initial_state_without_zero_loop() {
        // δ(q0, 0) ≠ q0: the sequence is still read on canonical words
        let m = Dfao::from_table(
            NumerationSystem::msd(2),
            0,
            vec![vec![1, 2], vec![0, 1], vec![2, 0]],
            vec![1, 0, 1],
        )
        .unwrap();
        let out = transduce_dfao(&m, &runsum2()).unwrap();
        let x = m.sequence_prefix(2048).unwrap();
        assert_eq!(
            out.sequence_prefix(2048).unwrap(),
            runsum2().transduce(&x).unwrap()
        );
    }
}
