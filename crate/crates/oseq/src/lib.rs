//! File formats and serialization for the `oseq` command-line tool:
//! JSON views of sequences, ideals, Betti diagrams, and verdicts, plus the
//! CSV atlas emitted by sweeps.

pub mod formats;

pub use formats::FormatError;
