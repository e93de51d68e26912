//! Transduction of automatic sequences.
//!
//! A sequence computed by a DFAO can be fed through a 1-uniform transducer,
//! and the result is again computed by a DFAO. [`dekking::transduce_dfao`]
//! builds that automaton for msd base-k input, [`dekking::transduce_lsd`]
//! handles lsd input by reversal, and [`extension::transduce_numeration`]
//! handles partial automata over Fibonacci representations.
//!
//! ```
//! use autoseq::library::{get_dfao, get_transducer};
//! use autoseq::dekking::transduce_dfao;
//!
//! let t = get_dfao("T").unwrap();
//! let runsum = get_transducer("RUNSUM2").unwrap();
//! let tsum1 = transduce_dfao(&t, &runsum).unwrap();
//! assert_eq!(tsum1.state_count(), 8);
//! assert_eq!(tsum1.sequence_prefix(8).unwrap(), vec![0, 1, 0, 0, 1, 1, 1, 0]);
//! ```

pub mod automaton;
pub mod dekking;
pub mod dot;
pub mod error;
pub mod expr;
pub mod extension;
pub mod format;
pub mod fractal;
pub mod library;
pub mod numeration;
pub mod transducer;

pub use automaton::{Dfao, Equivalence, UniformMorphism};
pub use error::{Error, Result};
pub use numeration::{DigitWord, NumerationSystem, Order};
pub use transducer::{StateFunction, Transducer};

/// Output and transducer symbols are small integers.
pub type Symbol = u32;

/// The padding symbol `#` of extended automata, outside every user alphabet.
pub const HASH: Symbol = Symbol::MAX;

pub fn symbol_to_string(s: Symbol) -> String {
    if s == HASH {
        "#".to_string()
    } else {
        s.to_string()
    }
}
