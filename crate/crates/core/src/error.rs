use thiserror::Error;

/// Errors raised by algebra, signature and functional operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty bracket")]
    EmptyBracket,
    #[error("letter {letter} out of alphabet 1..={d}")]
    LetterOutOfAlphabet { letter: u32, d: u32 },
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("half-shuffles undefined on e")]
    HalfShuffleOnEmpty,
    #[error("composition sums to {sum}, word has length {len}")]
    CompositionMismatch { sum: usize, len: usize },
    #[error("truncation weights differ: {0} vs {1}")]
    TruncationMismatch(u32, u32),
    #[error("alphabet sizes differ: {0} vs {1}")]
    AlphabetMismatch(u32, u32),
    #[error("scalar kinds differ (exact vs float)")]
    ScalarKindMismatch,
    #[error("word {word} has weight {weight}, beyond truncation weight {max_weight}")]
    BeyondTruncation {
        word: String,
        weight: u32,
        max_weight: u32,
    },
    #[error("convolution exponential requires coefficient 0 on the empty word")]
    ExpCoefficientAtUnit,
    #[error("convolution logarithm requires coefficient 1 on the empty word")]
    LogCoefficientAtUnit,
    #[error("window ({from}, {to}) is reversed")]
    ReversedWindow { from: usize, to: usize },
    #[error("windows ({0}, {1}) and ({2}, {3}) do not abut")]
    NonAbuttingWindows(usize, usize, usize, usize),
    #[error("operation requires exact rational scalars")]
    ExactScalarsRequired,
    #[error("point has dimension {found}, series has dimension {expected}")]
    DimensionMismatch { expected: usize, found: usize },
}

impl Error {
    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
