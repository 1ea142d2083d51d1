use thiserror::Error;

use crate::{MAX_LIMIT, MIN_LIMIT};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SieveError {
    #[error("limit {0} outside supported range [{MIN_LIMIT}, {MAX_LIMIT}]")]
    LimitOutOfRange(u64),
    #[error("argument must be at least 1")]
    ZeroArgument,
    #[error("{0} has no roman numeral (supported range [1, 3999])")]
    RomanOutOfRange(u64),
    #[error("{0} has no english name (supported range [0, 20000])")]
    EnglishOutOfRange(u64),
}
