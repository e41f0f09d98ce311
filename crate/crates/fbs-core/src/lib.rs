//! Graph similarity search built on personalized PageRank.
//!
//! The crate computes node-to-node relevance on directed or undirected
//! graphs from two perspectives at once: how strongly a random surfer
//! starting at the query reaches a candidate (forward), and how strongly
//! a surfer starting at the candidate reaches the query on the reversed
//! graph (backward). The two feature values are fused by a combiner into
//! a single similarity score.
//!
//! Alongside the two-sided measure the crate ships classic baselines
//! (personalized PageRank alone, personalized SALSA, Monte Carlo SimRank,
//! Adamic-Adar), ranking-quality and community metrics, a link-prediction
//! harness with cross-validated logistic regression, and a planted
//! partition generator for synthetic benchmarks.
//!
//! The crate is `no_std` + `alloc`; all I/O lives in the companion CLI
//! crate. Every operation is deterministic for a fixed seed.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod baselines;
pub mod error;
pub mod eval;
pub mod fbs;
pub mod graph;
pub(crate) mod math;
pub mod ppr;

pub use error::{Error, Result};
pub use graph::{Graph, GraphStats, NodeId};
