//! Order-preserving map over independent jobs, parallel when the `parallel`
//! feature is enabled.

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    #[default]
    Sequential,
    /// `None` uses every available core.
    Parallel { workers: Option<usize> },
}

/// Runs jobs on a fixed worker pool, or inline.
pub struct Executor {
    #[cfg(feature = "parallel")]
    pool: Option<rayon::ThreadPool>,
}

impl Executor {
    pub fn new(exec: Execution) -> Self {
        #[cfg(feature = "parallel")]
        {
            let pool = match exec {
                Execution::Sequential => None,
                Execution::Parallel { workers } => {
                    let mut b = rayon::ThreadPoolBuilder::new();
                    if let Some(w) = workers {
                        b = b.num_threads(w.max(1));
                    }
                    Some(b.build().expect("thread pool starts"))
                }
            };
            Executor { pool }
        }
        #[cfg(not(feature = "parallel"))]
        {
            if matches!(exec, Execution::Parallel { .. }) {
                log::warn!("built without the `parallel` feature; running sequentially");
            }
            Executor {}
        }
    }

    /// `f` applied to every item, results in input order.
    pub fn map<T, R, F>(&self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if let Some(pool) = &self.pool {
            use rayon::prelude::*;
            return pool.install(|| items.par_iter().map(&f).collect());
        }
        items.iter().map(f).collect()
    }

    pub fn workers(&self) -> usize {
        #[cfg(feature = "parallel")]
        if let Some(pool) = &self.pool {
            return pool.current_num_threads();
        }
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keeps_order() {
        let items: Vec<u64> = (0..1000).collect();
        let seq = Executor::new(Execution::Sequential).map(&items, |x| x * x);
        let par = Executor::new(Execution::Parallel { workers: Some(4) }).map(&items, |x| x * x);
        assert_eq!(seq, par);
        assert_eq!(seq[999], 999 * 999);
    }
}
