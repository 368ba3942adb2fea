//! Big Five questionnaire scoring and LLM persona evaluation harness.
//!
//! The crate covers the full pipeline: scoring 50-item IPIP questionnaires
//! into normalized `(O, C, E, A, N)` vectors, labeling them against a table
//! of discrete personality profiles, cleaning and sampling survey datasets,
//! generating synthetic questionnaire responses from a chat-completions
//! backend (or a deterministic offline mock), and computing the evaluation
//! metrics (accuracy with confidence interval, RMSPE, inter-rater
//! reliability, violin summaries, LDA projections).

pub mod error;
pub mod files;
pub mod generator;
pub mod ingest;
pub mod metrics;
pub mod personality;
pub mod projection;
pub mod provenance;
pub mod report;
pub mod scoring;
pub mod stats;

pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;
