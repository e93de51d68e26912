use crate::automaton::Dfao;
use crate::error::{Error, Result};
use crate::numeration::{Kind, NumerationSystem, Order};
use crate::Symbol;

/// A prolongable k-uniform morphism on letters `0..m` with a coding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniformMorphism {
    k: usize,
    images: Vec<Vec<usize>>,
    coding: Vec<Symbol>,
    seed: usize,
}

impl UniformMorphism {
    pub fn new(images: Vec<Vec<usize>>, coding: Vec<Symbol>, seed: usize) -> Result<Self> {
        let m = images.len();
        if m == 0 {
            return Err(Error::Invalid("morphism has an empty alphabet".into()));
        }
        if coding.len() != m {
            return Err(Error::Invalid(format!(
                "coding covers {} letters, alphabet has {m}",
                coding.len()
            )));
        }
        let k = images[0].len();
        if k < 2 {
            return Err(Error::Invalid(
                "morphism must be k-uniform with k >= 2".into(),
            ));
        }
        for (q, img) in images.iter().enumerate() {
            if img.len() != k {
                return Err(Error::Invalid(format!(
                    "image of letter {q} has length {}, expected {k}",
                    img.len()
                )));
            }
            if let Some(t) = img.iter().find(|&&t| t >= m) {
                return Err(Error::Invalid(format!(
                    "image letter {t} is not in the alphabet"
                )));
            }
        }
        if seed >= m {
            return Err(Error::Invalid(format!(
                "seed {seed} is not in the alphabet"
            )));
        }
        if images[seed][0] != seed {
            return Err(Error::NotProlongable { seed });
        }
        Ok(UniformMorphism {
            k,
            images,
            coding,
            seed,
        })
    }

    /// Morphism with the identity coding.
    pub fn uncoded(images: Vec<Vec<usize>>, seed: usize) -> Result<Self> {
        let coding = (0..images.len() as Symbol).collect();
        Self::new(images, coding, seed)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn seed(&self) -> usize {
        self.seed
    }

    pub fn alphabet_size(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, letter: usize) -> &[usize] {
        &self.images[letter]
    }

    pub fn coding(&self) -> &[Symbol] {
        &self.coding
    }

    pub fn apply(&self, word: &[usize]) -> Vec<usize> {
        word.iter()
            .flat_map(|&q| self.images[q].iter().copied())
            .collect()
    }

    /// First `len` letters of the fixed point starting with the seed.
    pub fn fixed_point_prefix(&self, len: usize) -> Vec<usize> {
        if len == 0 {
            return Vec::new();
        }
        let mut word = vec![self.seed];
        while word.len() < len {
            word = self.apply(&word);
        }
        word.truncate(len);
        word
    }
}

/// First `len` symbols of the coded fixed point.
pub fn prefix(m: &UniformMorphism, len: usize) -> Vec<Symbol> {
    m.fixed_point_prefix(len)
        .into_iter()
        .map(|q| m.coding[q])
        .collect()
}

/// Complete msd base-k DFAO with one state per letter: `δ(q, i) = h(q)[i]`.
pub fn from_morphism(m: &UniformMorphism) -> Result<Dfao> {
    if m.images[m.seed][0] != m.seed {
        return Err(Error::NotProlongable { seed: m.seed });
    }
    Dfao::from_table(
        NumerationSystem::msd(m.k as u32),
        m.seed,
        m.images.clone(),
        m.coding.clone(),
    )
}

/// Morphism `h(q) = δ(q, 0) ⋯ δ(q, k−1)` with the DFAO outputs as coding.
pub fn to_morphism(dfao: &Dfao) -> Result<UniformMorphism> {
    let sys = dfao.numeration();
    if !matches!(sys.kind, Kind::Base(_)) || sys.order != Order::Msd {
        return Err(Error::Invalid(format!(
            "morphism conversion needs a base-k msd automaton, got {sys}"
        )));
    }
    dfao.ensure_complete()?;
    let images = (0..dfao.state_count())
        .map(|q| (0..dfao.radix()).map(|d| dfao.step(q, d)).collect())
        .collect();
    UniformMorphism::new(images, dfao.outputs().to_vec(), dfao.initial())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn text(w: &[Symbol]) -> String {
        w.iter().map(|d| d.to_string()).collect()
    }

    fn thue_morse() -> UniformMorphism {
        UniformMorphism::uncoded(vec![vec![0, 1], vec![1, 0]], 0).unwrap()
    }

    #[test]
    fn prefixes() {
        assert_eq!(text(&prefix(&thue_morse(), 16)), "0110100110010110");
        // letters: 0 = "1", 1 = "0"; 1 -> 10, 0 -> 11
        let pd = UniformMorphism::new(vec![vec![0, 1], vec![0, 0]], vec![1, 0], 0).unwrap();
        assert_eq!(text(&prefix(&pd, 8)), "10111010");
        assert!(prefix(&pd, 0).is_empty());
    }

    #[test]
    fn validation() {
        assert_eq!(
            UniformMorphism::uncoded(vec![vec![1, 0], vec![0, 1]], 0),
            Err(Error::NotProlongable { seed: 0 })
        );
        assert!(UniformMorphism::uncoded(vec![vec![0, 1], vec![1]], 0).is_err());
        assert!(UniformMorphism::uncoded(vec![vec![0]], 0).is_err());
        assert!(UniformMorphism::new(vec![vec![0, 0]], vec![], 0).is_err());
    }

    #[test]
    fn dfao_round_trip() {
        let tm = thue_morse();
        let dfao = from_morphism(&tm).unwrap();
        assert_eq!(dfao.state_count(), 2);
        assert_eq!(to_morphism(&dfao).unwrap(), tm);
        for n in 0..1024u64 {
            assert_eq!(
                dfao.eval(n).unwrap(),
                prefix(&tm, n as usize + 1)[n as usize]
            );
        }
    }

    #[test]
    fn constant_morphism() {
        let m = UniformMorphism::new(vec![vec![0, 0]], vec![0], 0).unwrap();
        let d = from_morphism(&m).unwrap();
        assert!((0..100).all(|n| d.eval(n) == Ok(0)));
    }

    #[test]
    fn to_morphism_requires_complete_msd() {
        let sys = NumerationSystem::lsd(2);
        let d = Dfao::from_table(sys, 0, vec![vec![0, 0]], vec![0]).unwrap();
        assert!(to_morphism(&d).is_err());
        let fib = NumerationSystem::fibonacci(Order::Msd);
        let p = Dfao::new(fib, 0, vec![vec![Some(0), None]], vec![0]).unwrap();
        assert!(to_morphism(&p).is_err());
    }
}
