//! Random polygon generation, the published corpus and the property suite.

pub mod corpus;
pub mod fixtures;
pub mod generator;
pub mod suite;

pub use corpus::{corpus, corpus_entry, CorpusEntry};
pub use fixtures::{pinned_diagonals, pinned_for, search_pinned, PinnedDiagonal};
pub use generator::{generate, generate_counted, GeneratorConfig, GeneratorKind};
pub use suite::{run_suite, tag_names, Mutation, SuiteConfig, SuiteReport, TagResult, DEFAULT_SEED};
