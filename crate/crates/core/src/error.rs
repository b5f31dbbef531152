//! Error types shared across the library.

use std::path::PathBuf;

use crate::wire::DecodeError;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Invalid configuration (bad rank, malformed peer list, ...).
    #[error("configuration error: {0}")]
    Config(String),

    /// A peer could not be reached during cluster startup.
    #[error("connect timeout: peer {peer} (rank {rank}) unreachable")]
    ConnectTimeout { rank: usize, peer: String },

    /// Two peers claimed the same rank during the startup handshake.
    #[error("duplicate rank {rank} in cluster handshake")]
    DuplicateRank { rank: usize },

    /// A peer connection dropped while the job was running.
    #[error("peer rank {rank} disconnected")]
    PeerDisconnected { rank: usize },

    /// Socket-level I/O failure talking to a peer.
    #[error("transport i/o with rank {rank}: {source}")]
    TransportIo {
        rank: usize,
        #[source]
        source: std::io::Error,
    },

    /// A payload failed to decode. `src_rank` is set when the bytes came
    /// off the wire during a shuffle.
    #[error("decode error{} at byte {}: {source}",
        src_rank.map(|r| format!(" from rank {r}")).unwrap_or_default(),
        source.offset())]
    Decode {
        src_rank: Option<usize>,
        #[source]
        source: DecodeError,
    },

    /// A mapper emitted a key outside the target's key range.
    #[error("emitted key {key} out of range for target of length {limit}")]
    KeyOutOfRange { key: String, limit: usize },

    /// File access failure, naming the path.
    #[error("cannot read {path}: {source}")]
    FileRead {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    /// Workers observed different sizes for a supposedly shared file.
    #[error("file {path} has inconsistent size across workers ({sizes:?})")]
    FileSizeMismatch { path: PathBuf, sizes: Vec<u64> },

    /// Numerical failure in an application algorithm.
    #[error("numerical error: {0}")]
    Numerical(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl From<DecodeError> for Error {
    fn from(source: DecodeError) -> Self {
        Error::Decode {
            src_rank: None,
            source,
        }
    }
}
