//! Small integer row-echelon state for the incremental independence test.

use num_integer::Integer;

/// Row-echelon basis of the columns chosen so far, each stored as a
/// primitive `i128` vector. Rows are kept ordered by pivot.
#[derive(Debug, Clone)]
pub(crate) struct Echelon {
    width: usize,
    rows: Vec<i128>,
    pivots: Vec<usize>,
}

/// Outcome of reducing a vector against the basis.
#[derive(Debug, PartialEq, Eq)]
pub(crate) enum Reduced {
    Zero,
    Residue(Vec<i128>),
    /// The 128-bit arithmetic overflowed; the caller falls back to exact solves.
    Overflow,
}

fn leading(v: &[i128]) -> Option<usize> {
    v.iter().position(|&x| x != 0)
}

fn make_primitive(v: &mut [i128]) {
    let g = v.iter().fold(0i128, |g, &x| g.gcd(&x));
    if g > 1 {
        v.iter_mut().for_each(|x| *x /= g);
    }
}

impl Echelon {
    pub(crate) fn new(width: usize) -> Self {
        Echelon {
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    #[cfg(test)]
    pub(crate) fn rank(&self) -> usize {
        self.pivots.len()
    }

    fn row(&self, i: usize) -> &[i128] {
        &self.rows[i * self.width..(i + 1) * self.width]
    }

    /// Eliminates every basis pivot from `v`.
    pub(crate) fn reduce(&self, mut v: Vec<i128>) -> Reduced {
        debug_assert_eq!(v.len(), self.width);
        for (i, &p) in self.pivots.iter().enumerate() {
            if v[p] == 0 {
                continue;
            }
            let row = self.row(i);
            let (a, b) = (row[p], v[p]);
            let g = a.gcd(&b);
            let (fa, fb) = (a / g, b / g);
            for k in 0..self.width {
                let lhs = v[k].checked_mul(fa);
                let rhs = row[k].checked_mul(fb);
                match lhs.zip(rhs).and_then(|(l, r)| l.checked_sub(r)) {
                    Some(x) => v[k] = x,
                    None => return Reduced::Overflow,
                }
            }
            make_primitive(&mut v);
        }
        if leading(&v).is_none() {
            Reduced::Zero
        } else {
            Reduced::Residue(v)
        }
    }

    /// Adds a reduced, non-zero vector to the basis.
    pub(crate) fn insert(&mut self, v: Vec<i128>) {
        let p = leading(&v).expect("non-zero residue");
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        let off = at * self.width;
        self.rows.splice(off..off, v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn detects_dependence() {
        let mut e = Echelon::new(3);
        for v in [vec![1, 2, 3], vec![0, 1, 1]] {
            match e.reduce(v) {
                Reduced::Residue(r) => e.insert(r),
                other => panic!("{other:?}"),
            }
        }
        assert_eq!(e.rank(), 2);
        assert_eq!(e.reduce(vec![2, 5, 7]), Reduced::Zero);
        assert!(matches!(e.reduce(vec![0, 0, 4]), Reduced::Residue(_)));
    }

    #[test]
    fn pivots_stay_sorted() {
        let mut e = Echelon::new(3);
        for v in [vec![0, 0, 5], vec![0, 3, 1], vec![2, 0, 0]] {
            if let Reduced::Residue(r) = e.reduce(v) {
                e.insert(r);
            }
        }
        assert_eq!(e.pivots, vec![0, 1, 2]);
        assert_eq!(e.reduce(vec![7, -1, 9]), Reduced::Zero);
    }

    #[test]
    fn entries_left_of_the_pivot_are_scaled() {
        let mut e = Echelon::new(3);
        e.insert(vec![0, 3, 1]);
        // [1, 1, 0] is independent of [0, 3, 1]; scaling only from the pivot on
        // would leave an inconsistent combination
        let Reduced::Residue(r) = e.reduce(vec![1, 1, 0]) else {
            panic!()
        };
        assert_eq!(r, vec![3, 0, -1]);
        e.insert(r);
        assert_eq!(e.reduce(vec![3, 6, 1]), Reduced::Zero);
    }

    #[test]
    fn overflow_is_reported() {
        let mut e = Echelon::new(2);
        e.insert(vec![i128::MAX, 1]);
        assert_eq!(e.reduce(vec![3, i128::MAX]), Reduced::Overflow);
    }
}
