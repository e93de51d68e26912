#![allow(dead_code)]

use autoseq::{Dfao, NumerationSystem, Order, Symbol, Transducer};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Complete DFAO with at most `max_states` states and outputs below `delta`.
pub fn random_dfao(
    rng: &mut ChaCha8Rng,
    sys: NumerationSystem,
    max_states: usize,
    delta: u32,
) -> Dfao {
    let k = sys.radix() as usize;
    let states = rng.gen_range(1..=max_states);
    let next = (0..states)
        .map(|_| (0..k).map(|_| rng.gen_range(0..states)).collect())
        .collect();
    let outputs = (0..states).map(|_| rng.gen_range(0..delta)).collect();
    let initial = rng.gen_range(0..states);
    Dfao::from_table(sys, initial, next, outputs).unwrap()
}

/// Transducer over `0..delta` with outputs below `gamma`.
pub fn random_transducer(
    rng: &mut ChaCha8Rng,
    max_states: usize,
    delta: u32,
    gamma: u32,
) -> Transducer {
    let v = rng.gen_range(1..=max_states);
    let rows = (0..v)
        .map(|_| {
            (0..delta)
                .map(|_| (rng.gen_range(0..v), rng.gen_range(0..gamma)))
                .collect()
        })
        .collect();
    Transducer::new((0..delta).collect(), 0, rows).unwrap()
}

/// Fibonacci DFAO defined exactly on the words without `11`: a random
/// complete binary automaton paired with the last digit read.
pub fn random_fibonacci_dfao(rng: &mut ChaCha8Rng, max_states: usize, delta: u32) -> Dfao {
    let base = random_dfao(rng, NumerationSystem::msd(2), max_states, delta);
    let n = base.state_count();
    // state 2q + last
    let next = (0..2 * n)
        .map(|s| {
            let (q, last) = (s / 2, s % 2);
            vec![
                Some(2 * base.next(q, 0).unwrap()),
                (last == 0).then(|| 2 * base.next(q, 1).unwrap() + 1),
            ]
        })
        .collect();
    let outputs = (0..2 * n).map(|s| base.output(s / 2)).collect();
    Dfao::new(
        NumerationSystem::fibonacci(Order::Msd),
        2 * base.initial(),
        next,
        outputs,
    )
    .unwrap()
}

/// Base-k digits of `n` by repeated division, msd first.
pub fn base_digits(n: u64, k: u64) -> Vec<u32> {
    let mut d = Vec::new();
    let mut x = n;
    while x > 0 {
        d.push((x % k) as u32);
        x /= k;
    }
    d.reverse();
    d
}

pub fn run(m: &Dfao, digits: &[u32]) -> Option<Symbol> {
    let mut q = m.initial();
    for &d in digits {
        q = m.next(q, d)?;
    }
    Some(m.output(q))
}

/// `x_n` for a complete base-k automaton, honouring its digit order.
pub fn eval_base(m: &Dfao, n: u64) -> Symbol {
    let mut d = base_digits(n, m.radix() as u64);
    if m.numeration().order == Order::Lsd {
        d.reverse();
    }
    run(m, &d).expect("complete automaton")
}

pub fn bits(s: &str) -> Vec<Symbol> {
    s.chars().map(|c| c.to_digit(10).unwrap()).collect()
}
