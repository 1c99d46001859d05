//! Command-line front end for `treepark-core`.
//!
//! Exit codes: 0 when every verdict holds (or is partial), 1 when a check
//! fails, 2 on usage or input errors, 3 when the object budget refuses the
//! request.

pub mod args;
pub mod run;
pub mod serialize;

pub use args::RunConfig;
pub use run::{run, EXIT_BUDGET, EXIT_CLAIM_FAILED, EXIT_OK, EXIT_USAGE};
pub use serialize::{serialize_polynomial, Format};
