//! Built-in automata, transducers and morphisms, and the brute-force
//! oracles used to check them.

pub mod oracle;

use crate::automaton::{from_morphism, Dfao, UniformMorphism};
use crate::error::{Error, Result};
use crate::format::{parse_dfao, parse_transducer, write_dfao, write_morphism, write_transducer};
use crate::numeration::{NumerationSystem, Order};
use crate::transducer::Transducer;

pub const RUNSUM2_TXT: &str = include_str!("../../corpus/RUNSUM2.txt");
pub const RUNPROD1357_TXT: &str = include_str!("../../corpus/RUNPROD1357.txt");
pub const XOR_TXT: &str = include_str!("../../corpus/XOR.txt");
pub const TSUM1_REV_TXT: &str = include_str!("../../corpus/TSUM1_REV.txt");

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EntryKind {
    Dfao,
    Transducer,
    Morphism,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CorpusObject {
    Dfao(Dfao),
    Transducer(Transducer),
    Morphism(UniformMorphism),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub kind: EntryKind,
    pub object: CorpusObject,
    pub provenance: &'static str,
}

impl CorpusEntry {
    pub fn dfao(&self) -> Option<&Dfao> {
        match &self.object {
            CorpusObject::Dfao(m) => Some(m),
            _ => None,
        }
    }

    pub fn transducer(&self) -> Option<&Transducer> {
        match &self.object {
            CorpusObject::Transducer(t) => Some(t),
            _ => None,
        }
    }

    pub fn morphism(&self) -> Option<&UniformMorphism> {
        match &self.object {
            CorpusObject::Morphism(m) => Some(m),
            _ => None,
        }
    }

    /// File name used when the entry is shipped as text.
    pub fn file_name(&self) -> String {
        format!("{}.txt", self.name)
    }
}

/// Every registered name, in a fixed order.
pub const NAMES: &[&str] = &[
    "T",
    "PD",
    "RS",
    "D",
    "FTM",
    "NSLDF",
    "NU_MOD2",
    "G8",
    "S3",
    "TSUM1_REV",
    "RUNSUM2",
    "RUNPROD1357",
    "XOR",
    "NEST",
    "T_MORPHISM",
    "PD_MORPHISM",
    "DD",
];

pub fn get(name: &str) -> Result<CorpusEntry> {
    let (kind, object, provenance) = match name {
        "T" => dfao(
            from_morphism(&thue_morse_morphism())?,
            "Thue-Morse, from 0 -> 01, 1 -> 10",
        ),
        "PD" => dfao(
            from_morphism(&period_doubling_morphism())?,
            "period-doubling, fixed point of 1 -> 10, 0 -> 11",
        ),
        "RS" => dfao(rudin_shapiro(), "Rudin-Shapiro, parity of 11-factors"),
        "D" => dfao(
            from_morphism(&dyck_morphism())?,
            "the word d, morphism dd with coding c",
        ),
        "FTM" => dfao(ftm(), "Fibonacci-Thue-Morse, parity x last digit"),
        "NSLDF" => dfao(nsldf(), "1 - second-to-last Zeckendorf digit"),
        "NU_MOD2" => dfao(nu_mod2(), "2-adic valuation mod 2, (0|1)*10(00)*"),
        "G8" => dfao(g8(), "odd part mod 8, lsd first"),
        "S3" => dfao(s3(), "sums of three squares"),
        "TSUM1_REV" => dfao(parse_dfao(TSUM1_REV_TXT)?, "lsd running sum of Thue-Morse"),
        "RUNSUM2" => transducer(parse_transducer(RUNSUM2_TXT)?, "running sum mod 2"),
        "RUNPROD1357" => transducer(parse_transducer(RUNPROD1357_TXT)?, "running product mod 8"),
        "XOR" => transducer(parse_transducer(XOR_TXT)?, "XOR of consecutive bits"),
        "NEST" => transducer(nest(), "nesting level, 0 opens and 1 closes"),
        "T_MORPHISM" => morphism(thue_morse_morphism(), "0 -> 01, 1 -> 10"),
        "PD_MORPHISM" => morphism(period_doubling_morphism(), "1 -> 10, 0 -> 11"),
        "DD" => morphism(dyck_morphism(), "dd with coding c"),
        _ => return Err(Error::UnknownName(name.to_string())),
    };
    let name = NAMES.iter().find(|&&n| n == name).expect("registered");
    Ok(CorpusEntry {
        name,
        kind,
        object,
        provenance,
    })
}

fn dfao(m: Dfao, p: &'static str) -> (EntryKind, CorpusObject, &'static str) {
    (EntryKind::Dfao, CorpusObject::Dfao(m), p)
}

fn transducer(t: Transducer, p: &'static str) -> (EntryKind, CorpusObject, &'static str) {
    (EntryKind::Transducer, CorpusObject::Transducer(t), p)
}

fn morphism(m: UniformMorphism, p: &'static str) -> (EntryKind, CorpusObject, &'static str) {
    (EntryKind::Morphism, CorpusObject::Morphism(m), p)
}

pub fn get_dfao(name: &str) -> Result<Dfao> {
    get(name)?
        .dfao()
        .cloned()
        .ok_or_else(|| Error::UnknownName(format!("{name} is not an automaton")))
}

pub fn get_transducer(name: &str) -> Result<Transducer> {
    get(name)?
        .transducer()
        .cloned()
        .ok_or_else(|| Error::UnknownName(format!("{name} is not a transducer")))
}

/// Text of the shipped file: the original hand-written listing where one exists,
/// otherwise the serialized object.
pub fn shipped_text(e: &CorpusEntry) -> String {
    match e.name {
        "RUNSUM2" => RUNSUM2_TXT.to_string(),
        "RUNPROD1357" => RUNPROD1357_TXT.to_string(),
        "XOR" => XOR_TXT.to_string(),
        "TSUM1_REV" => TSUM1_REV_TXT.to_string(),
        _ => match &e.object {
            CorpusObject::Dfao(m) => write_dfao(m),
            CorpusObject::Transducer(t) => write_transducer(t),
            CorpusObject::Morphism(m) => write_morphism(m),
        },
    }
}

pub fn thue_morse_morphism() -> UniformMorphism {
    UniformMorphism::uncoded(vec![vec![0, 1], vec![1, 0]], 0).expect("valid")
}

/// Letter 0 codes to 1 and letter 1 to 0, so the seed is letter 0.
pub fn period_doubling_morphism() -> UniformMorphism {
    UniformMorphism::new(vec![vec![0, 1], vec![0, 0]], vec![1, 0], 0).expect("valid")
}

pub fn dyck_morphism() -> UniformMorphism {
    let images = [
        [0, 1],
        [2, 3],
        [4, 5],
        [6, 7],
        [2, 8],
        [6, 5],
        [5, 6],
        [9, 3],
        [8, 9],
        [9, 8],
    ];
    UniformMorphism::new(
        images.iter().map(|i| i.to_vec()).collect(),
        vec![0, 1, 0, 0, 1, 0, 1, 1, 0, 1],
        0,
    )
    .expect("valid")
}

fn table(sys: NumerationSystem, next: &[&[usize]], outputs: &[u32]) -> Dfao {
    Dfao::from_table(
        sys,
        0,
        next.iter().map(|r| r.to_vec()).collect(),
        outputs.to_vec(),
    )
    .expect("valid table")
}

fn partial(sys: NumerationSystem, next: &[&[Option<usize>]], outputs: &[u32]) -> Dfao {
    Dfao::new(
        sys,
        0,
        next.iter().map(|r| r.to_vec()).collect(),
        outputs.to_vec(),
    )
    .expect("valid table")
}

/// States `(parity, last digit)`.
fn rudin_shapiro() -> Dfao {
    table(
        NumerationSystem::msd(2),
        &[&[0, 1], &[0, 3], &[2, 3], &[2, 1]],
        &[0, 0, 1, 1],
    )
}

/// States `(parity, last digit)`; a 1 after a 1 is undefined.
fn ftm() -> Dfao {
    partial(
        NumerationSystem::fibonacci(Order::Msd),
        &[
            &[Some(0), Some(3)],
            &[Some(0), None],
            &[Some(2), Some(1)],
            &[Some(2), None],
        ],
        &[0, 0, 1, 1],
    )
}

/// Last two digits `x0`, `1`, `10`.
fn nsldf() -> Dfao {
    partial(
        NumerationSystem::fibonacci(Order::Msd),
        &[&[Some(0), Some(1)], &[Some(2), None], &[Some(0), Some(1)]],
        &[1, 1, 0],
    )
}

/// No 1 yet, even zeros after the last 1, odd zeros after the last 1.
fn nu_mod2() -> Dfao {
    table(
        NumerationSystem::msd(2),
        &[&[0, 1], &[2, 1], &[1, 1]],
        &[0, 0, 1],
    )
}

/// Skips trailing zeros, then reads the three lowest bits of the odd part.
fn g8() -> Dfao {
    table(
        NumerationSystem::lsd(2),
        &[
            &[0, 1],
            &[2, 3],
            &[4, 5],
            &[6, 7],
            &[4, 4],
            &[5, 5],
            &[6, 6],
            &[7, 7],
        ],
        &[1, 1, 1, 3, 1, 5, 3, 7],
    )
}

/// msd acceptor for numbers not of the form `4^i (8j + 7)`: tracks whether
/// the digits so far end in `111` followed by an even run of zeros.
fn s3() -> Dfao {
    table(
        NumerationSystem::msd(2),
        &[&[0, 1], &[0, 2], &[0, 3], &[4, 3], &[5, 1], &[4, 1]],
        &[1, 1, 1, 0, 1, 0],
    )
}

/// Depth counters 0..=3 and a sink at index 4.
fn nest() -> Transducer {
    let rows = (0..5usize)
        .map(|v| {
            [0i64, 1]
                .iter()
                .map(|&a| {
                    if v == 4 {
                        return (4, 4);
                    }
                    let depth = v as i64 + if a == 0 { 1 } else { -1 };
                    if (0..=3).contains(&depth) {
                        (depth as usize, depth as u32)
                    } else {
                        (4, 4)
                    }
                })
                .collect()
        })
        .collect();
    Transducer::new(vec![0, 1], 0, rows).expect("valid")
}
