use thiserror::Error;

use crate::symbolic::Word;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid symbol {0:?}: words are over the alphabet {{0,1}}")]
    InvalidSymbol(char),

    #[error("cannot parse sequence {input:?}: {reason}")]
    SequenceSyntax { input: String, reason: &'static str },

    #[error("cannot parse rational {0:?}: expected m/n with positive integers")]
    RationalSyntax(String),

    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),

    #[error("rational {num}/{den} lies outside the open interval (0, 1/2)")]
    RationalOutOfRange { num: u64, den: u64 },

    #[error("empty word where a non-empty word is required")]
    EmptyWord,

    #[error("word {word} is not primitive: it is a power of {root}")]
    NotPrimitive { word: Word, root: Word },

    #[error("decoration {word} is not maximal: the shift by {shift} of ({periodic})^∞ is larger in the unimodal order")]
    NotMaximal {
        word: Word,
        periodic: Word,
        shift: usize,
    },

    #[error("homoclinic code variant {0} is not supported: only 010w.b10 with b the parity of w is handled")]
    UnsupportedVariant(String),

    #[error("list of rationals is empty")]
    EmptyList,

    #[error("rational {0} occurs more than once in the list")]
    DuplicateRational(String),

    #[error("not a P-list: limiting point C{limiting} has successor C{successor} but C{intruder} is also limiting")]
    NotAPList {
        limiting: usize,
        successor: usize,
        intruder: usize,
    },

    #[error("invalid rectangle: {0}")]
    InvalidRectangle(String),

    #[error("max period {requested} exceeds the cap of {cap}")]
    PeriodCap { requested: usize, cap: usize },

    #[error("mismatched operands: {0}")]
    Mismatch(String),

    #[error("generator family {0} has no pruning region")]
    UnsupportedFamily(String),

    #[error("cannot write {path}: {reason}")]
    Output { path: String, reason: String },

    #[error("invariant violated: {0}")]
    Invariant(String),
}
