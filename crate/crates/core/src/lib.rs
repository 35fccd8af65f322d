//! Core library for compiling commonsense if-then statements into
//! first-order rules and for scoring predicted formulas.
//!
//! The crate is `no_std` (with `alloc`) and holds the pure, deterministic
//! parts of the toolkit:
//!
//! * [`fol`] — the rule data model, its canonical single-line surface
//!   syntax (serializer, parser, tokenizer), and the quantification
//!   post-process.
//! * [`pos`] — part-of-speech tags, tagged tokens, and a small
//!   lexicon-plus-suffix tagger.
//! * [`ingest`] — if-then record model, individual-mention normalization,
//!   and the PersonZ filter.
//! * [`translate`] — the event-to-body / inference-to-head chunking
//!   algorithms that turn a record into a rule.
//! * [`metrics`] — per-formula accuracy, token edit distance, and
//!   per-token accuracy over whitespace token sequences.
//! * [`dataset`] — sentence rendering, category filters, and seeded
//!   split/sample operations.
//!
//! File formats, readers, and the command-line interface live in the
//! companion `atomic2fol` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod dataset;
pub mod fol;
pub mod ingest;
pub mod metrics;
pub mod pos;
pub mod translate;

pub use dataset::{render_sentence, sample, split, CategoryFilter, DatasetPair};
pub use fol::{parse, tokenize, Atom, FormulaTokens, ParseError, Rule, Variable};
pub use ingest::{AtomicRecord, Category, Dimension};
pub use metrics::{edit_distance, evaluate, formula_accuracy, token_accuracy, EvalReport};
pub use pos::{PosTag, TaggedToken, Tagger};
pub use translate::{atomic_to_rule, TranslateError};
