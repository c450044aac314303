use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::tuple::Tuple;

/// At most `capacity` tuples in ascending score order; equal scores keep
/// insertion order.
#[derive(Debug, Clone)]
pub struct TupleList {
    capacity: usize,
    items: Vec<Tuple>,
}

impl TupleList {
    pub(crate) fn new(capacity: usize) -> Self {
        TupleList {
            capacity,
            items: Vec::new(),
        }
    }

    /// Takes tuples already in ascending score order.
    pub(crate) fn from_sorted(capacity: usize, items: Vec<Tuple>) -> Self {
        debug_assert!(items.len() <= capacity);
        debug_assert!(items.windows(2).all(|w| w[0].score <= w[1].score));
        TupleList { capacity, items }
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    /// True while the list stayed strictly below capacity.
    pub fn below_capacity(&self) -> bool {
        self.items.len() < self.capacity
    }

    pub fn tuples(&self) -> &[Tuple] {
        &self.items
    }

    pub(crate) fn into_tuples(self) -> Vec<Tuple> {
        self.items
    }

    /// Inserts `t`; when full, one of the lowest-scoring tuples (the new one
    /// included) is dropped uniformly at random.
    pub(crate) fn insert(&mut self, t: Tuple, rng: &mut ChaCha8Rng) {
        if self.items.len() >= self.capacity {
            let min = self.items[0].score;
            if t.score < min {
                return;
            }
            let ties = self.items.partition_point(|x| x.score == min);
            if t.score == min {
                let r = rng.random_range(0..=ties);
                if r == ties {
                    return;
                }
                self.items.remove(r);
            } else {
                self.items.remove(rng.random_range(0..ties));
            }
        }
        let at = self.items.partition_point(|x| x.score <= t.score);
        self.items.insert(at, t);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn scored(s: i64) -> Tuple {
        let mut t = Tuple::empty(1);
        t.score = s;
        t
    }

    fn scores(l: &TupleList) -> Vec<i64> {
        l.tuples().iter().map(Tuple::score).collect()
    }

    #[test]
    fn keeps_ascending_order_and_capacity() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let mut l = TupleList::new(3);
        for s in [5, 1, 3, 4, 0, 2] {
            l.insert(scored(s), &mut rng);
            assert!(l.len() <= 3);
        }
        assert_eq!(scores(&l), vec![3, 4, 5]);
        assert!(!l.below_capacity());
    }

    #[test]
    fn evicts_among_minima_only() {
        for seed in 0..20 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut l = TupleList::new(3);
            for s in [1, 1, 9] {
                l.insert(scored(s), &mut rng);
            }
            l.insert(scored(1), &mut rng);
            assert_eq!(scores(&l), vec![1, 1, 9]);
        }
    }

    #[test]
    fn eviction_hits_every_minimum() {
        let mut hit = [false; 3];
        for seed in 0..200 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut l = TupleList::new(2);
            let mut a = scored(1);
            a.set_label(0, super::super::Label::H);
            l.insert(a, &mut rng);
            l.insert(scored(1), &mut rng);
            let mut c = scored(1);
            c.set_label(0, super::super::Label::U);
            l.insert(c, &mut rng);
            let labels: Vec<_> = l.tuples().iter().map(|t| t.label(0)).collect();
            use super::super::Label::*;
            let dropped = match labels.as_slice() {
                [UK, U] => 0,
                [H, U] => 1,
                [H, UK] => 2,
                other => panic!("{other:?}"),
            };
            hit[dropped] = true;
        }
        assert_eq!(hit, [true; 3]);
    }

    #[test]
    fn leaf_list_is_below_capacity() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let mut l = TupleList::new(2);
        l.insert(scored(0), &mut rng);
        assert!(l.below_capacity());
    }
}
