//! Brute-force reference implementations, written directly from the
//! arithmetic or word-level definitions and used to check the automata.

use crate::error::{Error, Result};
use crate::Symbol;

/// Sum of the binary digits of `n`.
pub fn s2(n: u64) -> u32 {
    n.count_ones()
}

pub fn thue_morse(n: u64) -> Symbol {
    s2(n) % 2
}

pub fn thue_morse_prefix(len: usize) -> Vec<Symbol> {
    (0..len as u64).map(thue_morse).collect()
}

/// `t_1[j]`, the running sum of Thue-Morse. Every aligned pair `t[2i] t[2i+1]`
/// holds exactly one 1.
pub fn thue_morse_runsum(j: u64) -> Symbol {
    let pairs = j.div_ceil(2);
    let tail = if j.is_multiple_of(2) {
        thue_morse(j) as u64
    } else {
        0
    };
    ((pairs + tail) % 2) as Symbol
}

/// `1 − ν2(n+1) mod 2`, the period-doubling sequence `10111010…`.
pub fn period_doubling(n: u64) -> Symbol {
    1 - (n + 1).trailing_zeros() % 2
}

/// Parity of the number of `11` factors in the binary representation.
pub fn rudin_shapiro(n: u64) -> Symbol {
    (n & (n >> 1)).count_ones() % 2
}

/// The 2-adic valuation, by repeated division.
pub fn nu2(n: u64) -> Result<u32> {
    if n == 0 {
        return Err(Error::ZeroInput);
    }
    let (mut n, mut v) = (n, 0);
    while n % 2 == 0 {
        n /= 2;
        v += 1;
    }
    Ok(v)
}

pub fn nu2_mod2(n: u64) -> Result<Symbol> {
    Ok(nu2(n)? % 2)
}

/// `ν2(n!) mod 2`, via `ν2(n!) = n − s2(n)`.
pub fn nu2_factorial_mod2(n: u64) -> Symbol {
    ((n - s2(n) as u64) % 2) as Symbol
}

/// Odd part of `n` mod 8, with `g(0) = 1`.
pub fn g_mod8(n: u64) -> Symbol {
    if n == 0 {
        return 1;
    }
    let mut n = n;
    while n.is_multiple_of(2) {
        n /= 2;
    }
    (n % 8) as Symbol
}

/// `∏_{1 ≤ i ≤ n} g(i) mod 8`, by direct iteration.
pub fn g_factorial_mod8_prefix(len: usize) -> Vec<Symbol> {
    let mut acc = 1;
    (0..len as u64)
        .map(|i| {
            acc = acc * g_mod8(i) % 8;
            acc
        })
        .collect()
}

/// Sum-of-three-squares test: `n` is not of the form `4^i (8j + 7)`.
pub fn in_s3(n: u64) -> bool {
    if n == 0 {
        return true;
    }
    let mut n = n;
    while n.is_multiple_of(4) {
        n /= 4;
    }
    n % 8 != 7
}

/// Is `n!` a sum of three squares, by factoring `n!` as `2^a · odd` through
/// repeated division of every factor.
pub fn factorial_in_s3(n: u64) -> bool {
    let (mut twos, mut odd) = (0u64, 1u64);
    for i in 1..=n {
        let mut f = i;
        while f % 2 == 0 {
            f /= 2;
            twos += 1;
        }
        odd = odd * (f % 8) % 8;
    }
    !(twos % 2 == 0 && odd == 7)
}

pub fn running_sum(w: &[Symbol]) -> Vec<Symbol> {
    let mut acc = 0;
    w.iter()
        .map(|&a| {
            acc = (acc + a) % 2;
            acc
        })
        .collect()
}

pub fn iterated_runsum(w: &[Symbol], m: usize) -> Vec<Symbol> {
    let mut w = w.to_vec();
    for _ in 0..m {
        w = running_sum(&w);
    }
    w
}

/// `binom(a, b) mod 2` by Lucas's theorem.
pub fn binom_mod2(a: u64, b: u64) -> Symbol {
    (b <= a && b & a == b) as Symbol
}

/// `t_m[k]` as the binomial-weighted sum over `t[0..=k]`.
pub fn t_binomial(m: u64, k: u64) -> Symbol {
    if m == 0 {
        return thue_morse(k);
    }
    let mut acc = 0;
    for j in 0..=k {
        acc ^= binom_mod2(m - 1 + (k - j), k - j) & thue_morse(j);
    }
    acc
}

/// `t_{2^n}[k] = t_1[⌊k/2^n⌋] + (⌊k/2^n⌋ + 1) t[k mod 2^n] mod 2`.
pub fn t_pow2_lemma(n: u32, k: u64) -> Symbol {
    let q = k >> n;
    let r = k & ((1 << n) - 1);
    (thue_morse_runsum(q) + ((q + 1) % 2) as Symbol * thue_morse(r)) % 2
}

/// The four-case closed form for `t_{2^n}[k]`.
pub fn t_pow2_formula(n: u32, k: u64) -> Symbol {
    let block = 1u64 << n;
    let q = k >> (n + 2);
    let r = k & ((block << 2) - 1);
    match r / block {
        0 => (thue_morse(q) + thue_morse(r)) % 2,
        1 => 1,
        2 => (thue_morse(q) + thue_morse(r - 2 * block)) % 2,
        _ => 0,
    }
}

/// First `len` symbols of `g_n(h^ω(0))` with
/// `g_n(x) = h^n(x) 1^{2^n} h^n(x) 0^{2^n}`.
pub fn corollary_5_5_prefix(n: u32, len: usize) -> Vec<Symbol> {
    let block = 1usize << n;
    let hn = thue_morse_prefix(block);
    let mut out = Vec::with_capacity(len + 4 * block);
    let mut i = 0;
    while out.len() < len {
        let x = thue_morse(i);
        out.extend(hn.iter().map(|&b| b ^ x));
        out.extend(std::iter::repeat_n(1, block));
        out.extend(hn.iter().map(|&b| b ^ x));
        out.extend(std::iter::repeat_n(0, block));
        i += 1;
    }
    out.truncate(len);
    out
}

/// Nesting level of a Dyck word, with 1 as the left parenthesis.
pub fn nesting_level(w: &[Symbol]) -> Result<u32> {
    let (mut depth, mut max) = (0i64, 0i64);
    for &a in w {
        match a {
            1 => depth += 1,
            0 => depth -= 1,
            _ => return Err(Error::NotBalanced),
        }
        if depth < 0 {
            return Err(Error::NotBalanced);
        }
        max = max.max(depth);
    }
    if depth != 0 {
        return Err(Error::NotBalanced);
    }
    Ok(max as u32)
}

/// No factor of the form `axaxa`.
pub fn is_overlap_free(w: &[Symbol]) -> bool {
    let n = w.len();
    for p in 1..=n.saturating_sub(1) / 2 {
        // run of positions j with w[j] = w[j + p]; an overlap of period p
        // needs p + 1 of them in a row
        let mut run = 0;
        for j in 0..n - p {
            if w[j] == w[j + p] {
                run += 1;
                if run > p {
                    return false;
                }
            } else {
                run = 0;
            }
        }
    }
    true
}

/// The Thue-Morse morphism `0 → 01, 1 → 10`.
pub fn mu(w: &[Symbol]) -> Vec<Symbol> {
    w.iter().flat_map(|&a| [a, 1 - a]).collect()
}

const DYCK_LIMIT: u32 = 10;

pub fn dyck_x(n: u32) -> Result<Vec<Symbol>> {
    if n > DYCK_LIMIT {
        return Err(Error::SizeLimit(format!(
            "x_{n} has {} symbols",
            6u64 << (2 * n)
        )));
    }
    let mut x = vec![1, 0];
    for _ in 0..n {
        let mut inner = vec![1, 0, 1];
        inner.extend(mu(&x));
        inner.extend([1, 0, 1]);
        x = mu(&inner);
    }
    Ok(x)
}

/// `y_n = 00 x_n 11`.
pub fn dyck_y(n: u32) -> Result<Vec<Symbol>> {
    let mut y = vec![0, 0];
    y.extend(dyck_x(n)?);
    y.extend([1, 1]);
    Ok(y)
}

/// First `len` symbols of `d = 01 y_0 y_1 y_2 …`.
pub fn dyck_d_prefix(len: usize) -> Result<Vec<Symbol>> {
    let mut d = vec![0, 1];
    let mut n = 0;
    while d.len() < len {
        d.extend(dyck_y(n)?);
        n += 1;
    }
    d.truncate(len);
    Ok(d)
}

/// Whether `i` lies in `{2} ∪ {2·4^n − 2 : n ≥ 1} ∪ {2·4^n + 1 : n ≥ 1}`.
pub fn in_dyck_difference_set(i: u64) -> bool {
    if i == 2 {
        return true;
    }
    let mut p = 4u64;
    while 2 * p - 2 <= i {
        if i == 2 * p - 2 || i == 2 * p + 1 {
            return true;
        }
        p *= 4;
    }
    false
}

/// Zeckendorf digits of `n`, msd first, by the greedy algorithm.
pub fn zeckendorf(n: u64) -> Vec<Symbol> {
    if n == 0 {
        return Vec::new();
    }
    let mut fibs = vec![1u64, 2];
    while *fibs.last().unwrap() <= n {
        let l = fibs.len();
        fibs.push(fibs[l - 1] + fibs[l - 2]);
    }
    let mut rest = n;
    let mut digits = Vec::new();
    for &f in fibs.iter().rev() {
        if f <= rest {
            rest -= f;
            digits.push(1);
        } else if !digits.is_empty() {
            digits.push(0);
        }
    }
    digits
}

/// Parity of the Zeckendorf digit sum: the Fibonacci-Thue-Morse sequence.
pub fn fibonacci_thue_morse(n: u64) -> Symbol {
    zeckendorf(n).iter().sum::<Symbol>() % 2
}

/// Second-to-last Zeckendorf digit, 0 when there is none.
pub fn second_to_last_zeckendorf(n: u64) -> Symbol {
    let z = zeckendorf(n);
    if z.len() < 2 {
        0
    } else {
        z[z.len() - 2]
    }
}

/// Prefix of the fixed point of `0 → 01, 1 → 0`.
pub fn fibonacci_word(len: usize) -> Vec<Symbol> {
    let mut w = vec![0];
    while w.len() < len.max(2) {
        w = w
            .iter()
            .flat_map(|&a| if a == 0 { vec![0, 1] } else { vec![0] })
            .collect();
    }
    w.truncate(len);
    w
}
