//! Exhaustive enumeration over `0..q^n` split into fixed chunks.
//!
//! Chunk boundaries do not depend on the thread count and partial tallies are
//! merged in index order, so results are identical for any `threads` setting.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::nt;

pub const DEFAULT_CAP: u64 = 1 << 22;
const CHUNK: u64 = 512;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumOptions {
    /// Largest `q^n` that may be enumerated.
    pub cap: u64,
    /// Worker threads; `None` uses the global rayon pool.
    pub threads: Option<usize>,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions {
            cap: DEFAULT_CAP,
            threads: None,
        }
    }
}

/// Partial result of an enumeration; `merge` receives tallies of later chunks.
pub trait Tally: Default + Send {
    fn merge(&mut self, later: Self);
}

impl Tally for u64 {
    fn merge(&mut self, later: Self) {
        *self += later;
    }
}

impl EnumOptions {
    pub fn with_cap(cap: u64) -> Self {
        EnumOptions {
            cap,
            ..Default::default()
        }
    }

    pub fn threads(mut self, threads: Option<usize>) -> Self {
        self.threads = threads;
        self
    }

    /// `q^n`, or `CapExceeded` when it is larger than the cap.
    pub fn check_size(&self, q: u64, n: u64) -> Result<u64> {
        match nt::checked_pow(q, n) {
            Some(size) if size <= self.cap => Ok(size),
            Some(size) => Err(Error::CapExceeded {
                size: size.to_string(),
                cap: self.cap,
            }),
            None => Err(Error::CapExceeded {
                size: format!("{q}^{n}"),
                cap: self.cap,
            }),
        }
    }

    /// Folds `visit` over every index in `0..total`.
    pub fn fold<T, F>(&self, total: u64, visit: F) -> Result<T>
    where
        T: Tally,
        F: Fn(u64, &mut T) + Sync,
    {
        let run = || {
            let chunks = total.div_ceil(CHUNK);
            (0..chunks)
                .into_par_iter()
                .map(|c| {
                    let mut acc = T::default();
                    for i in c * CHUNK..((c + 1) * CHUNK).min(total) {
                        visit(i, &mut acc);
                    }
                    acc
                })
                .reduce(T::default, |mut a, b| {
                    a.merge(b);
                    a
                })
        };
        match self.threads {
            None => Ok(run()),
            Some(t) => {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(t.max(1))
                    .build()
                    .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
                Ok(pool.install(run))
            }
        }
    }
}
