//! Permutations of `{0, .., m-1}`.

use std::fmt;

use rand::Rng;

/// A bijection of `{0, .., m-1}` stored by images: `images[k]` is where `k` goes.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(m: usize) -> Self {
        Permutation {
            images: (0..m).collect(),
        }
    }

    /// Validates that `images` is a bijection.
    pub fn from_images(images: Vec<usize>) -> Self {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            assert!(i < images.len() && !seen[i], "not a permutation: {images:?}");
            seen[i] = true;
        }
        Permutation { images }
    }

    /// The transposition exchanging `a` and `b`.
    pub fn transposition(m: usize, a: usize, b: usize) -> Self {
        assert!(a < m && b < m && a != b);
        let mut images: Vec<usize> = (0..m).collect();
        images.swap(a, b);
        Permutation { images }
    }

    /// The adjacent transposition `(i, i+1)`.
    pub fn adjacent(m: usize, i: usize) -> Self {
        Permutation::transposition(m, i, i + 1)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, k: usize) -> usize {
        self.images[k]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &i)| k == i)
    }

    /// Composition as functions: `(a.compose(b))(k) = a(b(k))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            images: other.images.iter().map(|&k| self.images[k]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (k, &i) in self.images.iter().enumerate() {
            images[i] = k;
        }
        Permutation { images }
    }

    /// Image of a set of positions.
    pub fn apply_set(&self, members: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = members.iter().map(|&k| self.images[k]).collect();
        out.sort_unstable();
        out
    }

    /// All of S_m in lexicographic order of image vectors. `m = 0` yields the
    /// empty permutation, the unit of S_0.
    pub fn all(m: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current: Vec<usize> = (0..m).collect();
        loop {
            out.push(Permutation {
                images: current.clone(),
            });
            if !next_lex(&mut current) {
                break;
            }
        }
        out
    }

    pub fn random<R: Rng>(rng: &mut R, m: usize) -> Permutation {
        let mut images: Vec<usize> = (0..m).collect();
        for k in (1..m).rev() {
            let j = rng.gen_range(0..=k);
            images.swap(k, j);
        }
        Permutation { images }
    }
}

fn next_lex(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // One-line form, 1-based for readability.
        let imgs: Vec<String> = self.images.iter().map(|i| (i + 1).to_string()).collect();
        write!(f, "[{}]", imgs.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_and_inverse() {
        let s = Permutation::adjacent(3, 0);
        let t = Permutation::adjacent(3, 1);
        let st = s.compose(&t);
        assert_eq!(st.apply(2), s.apply(t.apply(2)));
        assert_eq!(st.apply(2), 0);
        assert!(st.compose(&st.inverse()).is_identity());
        assert!(s.compose(&s).is_identity());
    }

    #[test]
    fn all_permutations_counts_and_order() {
        assert_eq!(Permutation::all(0).len(), 1);
        assert_eq!(Permutation::all(1).len(), 1);
        assert_eq!(Permutation::all(3).len(), 6);
        let all4 = Permutation::all(4);
        assert_eq!(all4.len(), 24);
        assert!(all4[0].is_identity());
        let mut sorted = all4.clone();
        sorted.sort();
        assert_eq!(sorted, all4);
        sorted.dedup();
        assert_eq!(sorted.len(), 24);
    }

    #[test]
    fn associativity_on_random_triples() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let a = Permutation::random(&mut rng, 6);
            let b = Permutation::random(&mut rng, 6);
            let c = Permutation::random(&mut rng, 6);
            assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
        }
    }
}
