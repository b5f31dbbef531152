//! Blaze: an in-memory cluster computing library built around a fast
//! MapReduce function.
//!
//! The library is organized in layers:
//!
//! * [`transport`] — a small message-passing kernel (rank, point-to-point
//!   messages, barrier, broadcast, all-to-all, tree reduction) with an
//!   in-process backend for tests and a socket backend for real clusters.
//! * [`wire`] — a compact, tag-free binary codec used for every payload
//!   that crosses a thread or worker boundary.
//! * [`containers`] — distributed containers ([`DistRange`], [`DistVector`],
//!   [`DistHashMap`]) plus `distribute`/`collect`/`load_file`/`topk`.
//! * [`mapreduce`] — the MapReduce engine: eager reduction through
//!   per-thread caches, a sharded node-local table, an all-to-all shuffle of
//!   locally reduced pairs, and a dense fast path for small fixed key
//!   ranges.
//! * [`apps`] — the bundled workloads (word count, PageRank, k-means,
//!   EM/GMM, nearest neighbors, Monte Carlo pi) with serial reference
//!   implementations in [`apps::oracle`].

pub mod apps;
pub mod containers;
pub mod error;
pub mod mapreduce;
pub mod random;
pub mod transport;
pub mod wire;

pub use containers::{distribute, distribute_map, load_file, DistHashMap, DistRange, DistVector};
pub use error::{Error, Result};
pub use mapreduce::{mapreduce, mapreduce_dense, mapreduce_opts, JobStats, MrOpts, Reducer};
pub use transport::{Backend, ClusterCtx, Envelope};
pub use wire::{Codec, KeyCodec, WireBuffer};
