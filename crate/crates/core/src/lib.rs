//! Zero-shot object-state classification over knowledge graphs.
//!
//! The pipeline has four stages:
//!
//! 1. **Graph construction** ([`ingest`], [`graph`]): parse local edge-dump
//!    and taxonomy files, then expand seed state classes into a bounded-hop
//!    knowledge graph under a node-inclusion policy.
//! 2. **Embedding training** ([`numerics`], [`gnn`], [`trainer`]): run a GNN
//!    over the graph and regress anchor-node outputs onto target classifier
//!    weights, producing semantic embeddings for every state class (seen and
//!    unseen).
//! 3. **Classifier assembly** ([`classifier`]): freeze the embeddings as the
//!    last layer of a classifier and fine-tune a feature adapter on
//!    seen-class examples only.
//! 4. **Evaluation** ([`eval`]): generalized zero-shot protocol — an exact
//!    bias sweep over unseen-class scores yielding the seen/unseen accuracy
//!    curve, best harmonic mean, and AUC.
//!
//! [`synth`] generates self-contained synthetic worlds for end-to-end runs,
//! and [`reference`] holds brute-force reference implementations used to
//! cross-check the fast paths.
//!
//! With the default `parallel` feature, batch inner loops (dense/sparse
//! matmul, sweep evaluation, grid running) use rayon. Results are bitwise
//! identical to the sequential fallback: work is split by independent output
//! rows, so each element is computed by the same scalar code either way.

pub mod classifier;
pub mod eval;
pub mod gnn;
pub mod graph;
pub mod ingest;
pub mod numerics;
pub mod parallel;
pub mod reference;
pub mod synth;
pub mod trainer;

pub use graph::KnowledgeGraph;
pub use numerics::matrix::Matrix;
