//! Linear-time decoders for two families of synchronization-error codes.
//!
//! * Monotone codes `M_{a,m,k}(n)` correct one deletion, and one reversal
//!   when `2 k_n <= m`.
//! * Azinv codes `A_{a,m}(n)` correct one balanced adjacent deletion (BAD),
//!   and one balanced adjacent reversal (BAR) when `2(n-1) <= m`.
//!
//! Both decoders are instances of the generic engines in [`unified`]. The
//! [`oracle`] and [`reference`] modules provide brute-force and definitional
//! cross-checks; [`sim`] and [`bench`] drive experiments.
//!
//! ```
//! use syncode::{MonotoneParams, Word};
//!
//! let code = MonotoneParams::new(9, 0, vec![1, 3, 6, 8]).unwrap();
//! let received: Word = "101".parse().unwrap();
//! let out = code.decode(&received);
//! assert_eq!(out.codeword().unwrap().to_string(), "1001");
//! ```

pub mod azinv;
pub mod bench;
pub mod code;
mod error;
pub mod monotone;
pub mod oracle;
mod outcome;
pub mod reference;
pub mod sim;
pub mod unified;
mod words;

pub use azinv::AzinvParams;
pub use code::{CodeParams, ErrorClass, Guarantee};
pub use error::{Error, Result};
pub use monotone::{levenshtein_params, MonotoneParams};
pub use outcome::{Branch, DecodeOutcome, DecodeTrace, Decoded, FailureReason};
pub use words::Word;
