mod common;

use autoseq::automaton::{equivalent, minimize, reverse, to_morphism};
use autoseq::dekking::{
    construct, find_period_preperiod, signature_of, transduce_dfao, transduce_lsd,
};
use autoseq::library::oracle::{iterated_runsum, thue_morse_prefix};
use autoseq::library::{get_dfao, get_transducer, thue_morse_morphism};
use autoseq::transducer::identity_transducer;
use autoseq::{NumerationSystem, StateFunction, Transducer};
use common::*;
use proptest::prelude::*;

/// `I(w)` by expanding `h^i(w)` letter by letter and folding state maps.
fn signature_by_expansion(
    m: &autoseq::UniformMorphism,
    t: &Transducer,
    len: usize,
    w: &[usize],
) -> Vec<StateFunction> {
    let mut word = w.to_vec();
    let mut sig = Vec::with_capacity(len);
    for _ in 0..len {
        let coded: Vec<u32> = word.iter().map(|&q| m.coding()[q]).collect();
        sig.push(t.state_function(&coded).unwrap());
        word = m.apply(&word);
    }
    sig
}

#[test]
fn thue_morse_running_sum_orbit() {
    let orbit =
        find_period_preperiod(&thue_morse_morphism(), &get_transducer("RUNSUM2").unwrap()).unwrap();
    assert_eq!((orbit.period, orbit.preperiod), (1, 2));
}

#[test]
fn running_sum_of_thue_morse_is_tsum1() {
    let t = get_dfao("T").unwrap();
    let runsum = get_transducer("RUNSUM2").unwrap();
    let tsum1 = transduce_dfao(&t, &runsum).unwrap();
    assert_eq!(tsum1.state_count(), 8);
    let orig = reverse(&get_dfao("TSUM1_REV").unwrap()).unwrap();
    assert!(equivalent(&tsum1, &orig).unwrap().is_equivalent());
    let tsum2 = transduce_dfao(&tsum1, &runsum).unwrap();
    assert_eq!(tsum2.state_count(), 16);
}

#[test]
fn lsd_pipeline_matches_word_oracle() {
    let rev = get_dfao("TSUM1_REV").unwrap();
    let runsum = get_transducer("RUNSUM2").unwrap();
    let out = transduce_lsd(&rev, &runsum).unwrap();
    assert_eq!(out.numeration(), NumerationSystem::lsd(2));
    let expect = iterated_runsum(&thue_morse_prefix(4096), 2);
    for n in 0..4096u64 {
        assert_eq!(eval_base(&out, n), expect[n as usize]);
    }
    let t_rev = reverse(&get_dfao("T").unwrap()).unwrap();
    let id = transduce_lsd(&t_rev, &identity_transducer(&[0, 1])).unwrap();
    assert!(equivalent(&id, &t_rev).unwrap().is_equivalent());
}

#[test]
fn incremental_signatures_on_corpus() {
    let runsum = get_transducer("RUNSUM2").unwrap();
    for name in ["T", "PD", "D"] {
        let m = get_dfao(name).unwrap();
        check_access_signatures(&m, &runsum);
    }
    check_access_signatures(&get_dfao("D").unwrap(), &get_transducer("NEST").unwrap());
}

/// Every raw state `(a, I(w))` must carry the signature of the word `w` that
/// its access path spells, and `a` must be the letter at that position.
fn check_access_signatures(m: &autoseq::Dfao, t: &Transducer) {
    let c = construct(m, t).unwrap();
    let h = &c.morphism;
    let len = c.orbit.signature_len();
    let fixed = h.fixed_point_prefix(1 << 14);
    for (state, path) in c.states.iter().zip(&c.access) {
        let n = path.iter().fold(0usize, |acc, &d| acc * h.k() + d as usize);
        if n >= fixed.len() {
            continue;
        }
        assert_eq!(state.letter, fixed[n]);
        let w = &fixed[..n];
        assert_eq!(state.signature, signature_of(h, t, &c.orbit, w).unwrap());
        assert_eq!(state.signature, signature_by_expansion(h, t, len, w));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn transduction_matches_word_oracle(seed: u64, k in 2u32..=3) {
        let mut r = rng(seed);
        let m = random_dfao(&mut r, NumerationSystem::msd(k), 4, 3);
        let delta = m.outputs().iter().max().unwrap() + 1;
        let t = random_transducer(&mut r, 3, delta, 3);
        let got = transduce_dfao(&m, &t).unwrap();
        let x: Vec<u32> = (0..2048).map(|n| eval_base(&m, n)).collect();
        let expect = t.transduce(&x).unwrap();
        for n in 0..2048u64 {
            prop_assert_eq!(eval_base(&got, n), expect[n as usize]);
        }
        check_access_signatures(&m, &t);
    }

    #[test]
    fn signature_concatenation_law(seed: u64, u in prop::collection::vec(0usize..3, 0..12), v in prop::collection::vec(0usize..3, 0..12)) {
        let mut r = rng(seed);
        let m = random_dfao(&mut r, NumerationSystem::msd(2), 3, 2);
        let h = to_morphism(&m.with_zero_loop_initial()).unwrap();
        let letters = h.alphabet_size();
        let u: Vec<usize> = u.into_iter().map(|q| q % letters).collect();
        let v: Vec<usize> = v.into_iter().map(|q| q % letters).collect();
        let t = random_transducer(&mut r, 3, 2, 2);
        let orbit = find_period_preperiod(&h, &t).unwrap();
        let su = signature_of(&h, &t, &orbit, &u).unwrap();
        let sv = signature_of(&h, &t, &orbit, &v).unwrap();
        let uv: Vec<usize> = u.iter().chain(&v).copied().collect();
        let suv = signature_of(&h, &t, &orbit, &uv).unwrap();
        let joined: Vec<StateFunction> = su.iter().zip(&sv).map(|(a, b)| a.then(b)).collect();
        prop_assert_eq!(&suv, &joined);
        prop_assert_eq!(suv, signature_by_expansion(&h, &t, orbit.signature_len(), &uv));
    }

    #[test]
    fn identity_transduction_is_minimization(seed: u64, k in 2u32..=3) {
        let mut r = rng(seed);
        let m = random_dfao(&mut r, NumerationSystem::msd(k), 5, 3);
        let id = identity_transducer(&[0, 1, 2]);
        let got = transduce_dfao(&m, &id).unwrap();
        // the result ignores leading zeros, so compare against the normalized input
        let normal = minimize(&m.with_zero_loop_initial()).unwrap();
        prop_assert!(equivalent(&got, &normal).unwrap().is_equivalent());
    }

    #[test]
    fn one_state_transducer_has_period_one(seed: u64) {
        let mut r = rng(seed);
        let m = random_dfao(&mut r, NumerationSystem::msd(2), 4, 2);
        let h = to_morphism(&m.with_zero_loop_initial()).unwrap();
        let t = random_transducer(&mut r, 1, 2, 3);
        prop_assert_eq!(find_period_preperiod(&h, &t).unwrap().period, 1);
    }
}
