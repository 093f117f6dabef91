//! Benchmark harness for top-N recommendation with implicit feedback.
//!
//! The crate trains and evaluates five recommender models (ItemKNN, PureSVD,
//! BPRMF, FM, NeuMF) under seven hyperparameter search algorithms (Random,
//! Anneal, TPE, SMAC, GPBO, Hyperband, BOHB) with a shared protocol:
//! global split-by-ratio with nested validation, uniform negative sampling,
//! 1000-candidate ranking, and a fixed tuning budget. Runs emit trial logs
//! (JSON Lines), report tables, and search-trajectory traces.

pub mod dataio;
pub mod hpo;
pub mod metrics;
pub mod models;
pub mod runner;
pub mod searchspace;
pub mod synth;

pub mod cli;
