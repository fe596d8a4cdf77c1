//! Core algorithms for analyzing rumor timelines on microblog data.
//!
//! The crate models a corpus of claims (rumors), each resolved by a single
//! authoritative tweet, and provides the building blocks of a veracity
//! pipeline:
//!
//! * [`corpus`] — the event → claim → tweet data model and its validation.
//! * [`lexicon`] — factuality cue lists (knowledge / report / belief / doubt),
//!   tokenization, Porter2 stemming, cue matching, and embedding-based
//!   lexicon extension.
//! * [`features`] — per-tweet cue ratios, tweet density, and timeline binning.
//! * [`certainty`] — crowd label aggregation and a weighted binomial-logit
//!   GLM predicting tweet certainty from cue ratios.
//! * [`trends`] — regression-line trend discontinuities (delta, reset,
//!   RMSD) over claim timelines and assembled feature vectors.
//! * [`classify`] — skew-correcting resampling, AdaBoost.M1 over weighted
//!   decision trees, and stratified cross-validation for the RES / VAL tasks.
//! * [`stats`] — rank correlation, signed-rank and rank-sum tests, and
//!   false-discovery-rate correction.
//! * [`synth`] — deterministic synthetic corpora with planted effects.
//!
//! The crate is `no_std`-compatible (requires `alloc`); disable the default
//! `std` feature for embedded or wasm use. IO and file formats live in the
//! companion `rumorlens` crate.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod certainty;
pub mod classify;
pub mod corpus;
pub mod features;
pub mod lexicon;
pub mod stats;
pub mod synth;
pub mod trends;

pub(crate) mod math;
