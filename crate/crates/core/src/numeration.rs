//! Numeration systems: base-k (msd or lsd) and Zeckendorf/Fibonacci.
//!
//! The canonical representation of 0 is the empty word in every system.
//! Value recovery tolerates leading zeros (trailing zeros for lsd words).

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub type Digit = u32;

/// Digit order of a representation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Order {
    Msd,
    Lsd,
}

impl Order {
    pub fn flipped(self) -> Order {
        match self {
            Order::Msd => Order::Lsd,
            Order::Lsd => Order::Msd,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    /// Base-k with digits `0..k`, `k >= 2`.
    Base(u32),
    /// Zeckendorf representations over `{0, 1}` with no factor `11`.
    Fibonacci,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct NumerationSystem {
    pub kind: Kind,
    pub order: Order,
}

/// A finite digit word together with the order it is written in.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct DigitWord {
    pub digits: Vec<Digit>,
    pub order: Option<Order>,
}

impl DigitWord {
    pub fn new(digits: Vec<Digit>, order: Order) -> Self {
        DigitWord {
            digits,
            order: Some(order),
        }
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }
}

impl fmt::Display for DigitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.digits.is_empty() {
            return f.write_str("ε");
        }
        let wide = self.digits.iter().any(|&d| d > 9);
        for (i, d) in self.digits.iter().enumerate() {
            if wide && i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

/// Fibonacci weights `F_2, F_3, ...` that fit in a `u64`.
fn fibonacci_weights() -> Vec<u64> {
    let mut w = vec![1u64, 2];
    loop {
        let n = w.len();
        match w[n - 1].checked_add(w[n - 2]) {
            Some(next) => w.push(next),
            None => return w,
        }
    }
}

impl NumerationSystem {
    pub fn base(k: u32, order: Order) -> Self {
        assert!(k >= 2, "base must be at least 2");
        NumerationSystem {
            kind: Kind::Base(k),
            order,
        }
    }

    pub fn msd(k: u32) -> Self {
        Self::base(k, Order::Msd)
    }

    pub fn lsd(k: u32) -> Self {
        Self::base(k, Order::Lsd)
    }

    pub fn fibonacci(order: Order) -> Self {
        NumerationSystem {
            kind: Kind::Fibonacci,
            order,
        }
    }

    /// Size of the digit alphabet.
    pub fn radix(&self) -> u32 {
        match self.kind {
            Kind::Base(k) => k,
            Kind::Fibonacci => 2,
        }
    }

    pub fn is_fibonacci(&self) -> bool {
        self.kind == Kind::Fibonacci
    }

    pub fn with_order(self, order: Order) -> Self {
        NumerationSystem { order, ..self }
    }

    /// The same system read in the opposite digit order.
    pub fn flipped(self) -> Self {
        self.with_order(self.order.flipped())
    }

    /// Canonical representation of `n` in this system's order.
    pub fn repr(&self, n: u64) -> DigitWord {
        let mut msd = Vec::new();
        match self.kind {
            Kind::Base(k) => {
                let k = u64::from(k);
                let mut m = n;
                while m > 0 {
                    msd.push((m % k) as Digit);
                    m /= k;
                }
                msd.reverse();
            }
            Kind::Fibonacci => {
                let weights = fibonacci_weights();
                let mut rest = n;
                let mut started = false;
                for &w in weights.iter().rev() {
                    if w <= rest {
                        rest -= w;
                        started = true;
                        msd.push(1);
                    } else if started {
                        msd.push(0);
                    }
                }
            }
        }
        if self.order == Order::Lsd {
            msd.reverse();
        }
        DigitWord::new(msd, self.order)
    }

    /// Digits of `n` in this system's order, as a plain vector.
    pub fn digits(&self, n: u64) -> Vec<Digit> {
        self.repr(n).digits
    }

    fn check_digits(&self, digits: &[Digit]) -> Result<()> {
        if let Some(&d) = digits.iter().find(|&&d| d >= self.radix()) {
            return Err(Error::InvalidDigit {
                digit: d,
                system: self.to_string(),
            });
        }
        Ok(())
    }

    /// Value of a digit word written in this system's order.
    pub fn value(&self, digits: &[Digit]) -> Result<u64> {
        self.check_digits(digits)?;
        let msd: Vec<Digit> = match self.order {
            Order::Msd => digits.to_vec(),
            Order::Lsd => digits.iter().rev().copied().collect(),
        };
        match self.kind {
            Kind::Base(k) => msd.iter().try_fold(0u64, |acc, &d| {
                acc.checked_mul(u64::from(k))
                    .and_then(|v| v.checked_add(u64::from(d)))
                    .ok_or(Error::Overflow)
            }),
            Kind::Fibonacci => {
                if msd.windows(2).any(|w| w == [1, 1]) {
                    return Err(Error::NonCanonical {
                        system: self.to_string(),
                    });
                }
                let weights = fibonacci_weights();
                let mut total = 0u64;
                for (i, &d) in msd.iter().rev().enumerate() {
                    if d == 1 {
                        let w = weights.get(i).ok_or(Error::Overflow)?;
                        total = total.checked_add(*w).ok_or(Error::Overflow)?;
                    }
                }
                Ok(total)
            }
        }
    }

    /// Whether `digits` is a canonical representation up to leading zeros.
    pub fn is_canonical(&self, digits: &[Digit]) -> bool {
        if self.check_digits(digits).is_err() {
            return false;
        }
        match self.kind {
            Kind::Base(_) => true,
            Kind::Fibonacci => !digits.windows(2).any(|w| w == [1, 1]),
        }
    }

    /// DFA over the digit alphabet accepting exactly the words that are
    /// representations up to leading zeros.
    pub(crate) fn validity(&self) -> ValidityDfa {
        match self.kind {
            Kind::Base(k) => ValidityDfa {
                next: vec![vec![0; k as usize]],
                accepting: vec![true],
            },
            // 0: last digit 0 (or nothing read), 1: last digit 1, 2: saw 11
            Kind::Fibonacci => ValidityDfa {
                next: vec![vec![0, 1], vec![0, 2], vec![2, 2]],
                accepting: vec![true, true, false],
            },
        }
    }
}

impl fmt::Display for NumerationSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let order = match self.order {
            Order::Msd => "msd",
            Order::Lsd => "lsd",
        };
        match self.kind {
            Kind::Base(k) => write!(f, "{order}_{k}"),
            Kind::Fibonacci => write!(f, "{order}_fib"),
        }
    }
}

impl FromStr for NumerationSystem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownNumeration(s.to_string());
        let (order, rest) = s.split_once('_').ok_or_else(unknown)?;
        let order = match order {
            "msd" => Order::Msd,
            "lsd" => Order::Lsd,
            _ => return Err(unknown()),
        };
        if rest == "fib" {
            return Ok(NumerationSystem::fibonacci(order));
        }
        match rest.parse::<u32>() {
            Ok(k) if k >= 2 => Ok(NumerationSystem::base(k, order)),
            _ => Err(unknown()),
        }
    }
}

/// Acceptor for the representation language of a numeration system.
#[derive(Clone, Debug)]
pub(crate) struct ValidityDfa {
    pub next: Vec<Vec<usize>>,
    pub accepting: Vec<bool>,
}

impl ValidityDfa {
    pub const START: usize = 0;

    /// True when every word with an accepted prefix-rejecting state stays
    /// rejected, i.e. the accepted language is prefix-closed.
    pub fn is_prefix_closed(&self) -> bool {
        let mut seen = vec![false; self.next.len()];
        let mut stack = vec![Self::START];
        seen[Self::START] = true;
        while let Some(s) = stack.pop() {
            for &t in &self.next[s] {
                if !self.accepting[s] && self.accepting[t] {
                    return false;
                }
                if !seen[t] {
                    seen[t] = true;
                    stack.push(t);
                }
            }
        }
        true
    }
}

pub fn repr(n: u64, sys: NumerationSystem) -> DigitWord {
    sys.repr(n)
}

/// Value of `w` in `sys`; a word tagged with the opposite order is read reversed.
pub fn value(w: &DigitWord, sys: NumerationSystem) -> Result<u64> {
    match w.order {
        Some(order) if order != sys.order => {
            let rev: Vec<Digit> = w.digits.iter().rev().copied().collect();
            sys.value(&rev)
        }
        _ => sys.value(&w.digits),
    }
}

pub fn is_canonical(w: &DigitWord, sys: NumerationSystem) -> bool {
    sys.is_canonical(&w.digits)
}
