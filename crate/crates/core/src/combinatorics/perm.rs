//! Permutations of `{1..n}` stored as image lists (`w[i-1] = w(i)`).
//!
//! A word `s_{i_1} ... s_{i_l}` denotes the composite `s_{i_1} ∘ ... ∘ s_{i_l}`.

pub type Perm = Vec<usize>;

pub fn identity(n: usize) -> Perm {
    (1..=n).collect()
}

pub fn is_identity(w: &[usize]) -> bool {
    w.iter().enumerate().all(|(i, &x)| x == i + 1)
}

/// `(a ∘ b)(i) = a(b(i))`.
pub fn compose(a: &[usize], b: &[usize]) -> Perm {
    b.iter().map(|&x| a[x - 1]).collect()
}

pub fn inverse(w: &[usize]) -> Perm {
    let mut out = vec![0; w.len()];
    for (i, &x) in w.iter().enumerate() {
        out[x - 1] = i + 1;
    }
    out
}

/// Coxeter length, the number of inversions.
pub fn length(w: &[usize]) -> usize {
    let mut l = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] {
                l += 1;
            }
        }
    }
    l
}

/// `w ∘ s_j`: swaps the entries at positions `j` and `j+1` (1-based).
pub fn times_simple(w: &[usize], j: usize) -> Perm {
    let mut out = w.to_vec();
    out.swap(j - 1, j);
    out
}

/// A reduced word for `w`, obtained by repeatedly stripping the leftmost
/// right descent: `w = (w s_j) s_j` whenever `w(j) > w(j+1)`.
pub fn reduced_word(w: &[usize]) -> Vec<usize> {
    let mut cur = w.to_vec();
    let mut rev = Vec::new();
    while let Some(j) = (1..cur.len()).find(|&j| cur[j - 1] > cur[j]) {
        cur.swap(j - 1, j);
        rev.push(j);
    }
    rev.reverse();
    rev
}

/// Product of simple reflections, as a permutation of `{1..n}`.
pub fn from_word(n: usize, word: &[usize]) -> Perm {
    let mut w = identity(n);
    for &j in word {
        w = times_simple(&w, j);
    }
    w
}

/// All permutations of `{1..n}` fixing `1..k` pointwise, in lexicographic
/// order of image lists.
pub fn fixing_prefix(n: usize, k: usize) -> Vec<Perm> {
    fn rec(prefix: &mut Perm, rest: &mut Vec<usize>, out: &mut Vec<Perm>) {
        if rest.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for idx in 0..rest.len() {
            let x = rest.remove(idx);
            prefix.push(x);
            rec(prefix, rest, out);
            prefix.pop();
            rest.insert(idx, x);
        }
    }
    let mut out = Vec::new();
    rec(&mut (1..=k).collect(), &mut (k + 1..=n).collect(), &mut out);
    out
}

/// All `k`-subsets of `{1..n}` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..=n {
            if n - x + 1 < k - cur.len() {
                break;
            }
            cur.push(x);
            rec(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, n, k, &mut Vec::new(), &mut out);
    out
}

/// The minimal-length permutation sending `i ↦ set[i-1]` for `i ≤ |set|` and
/// the remaining points increasingly onto the complement.
pub fn min_coset_rep(n: usize, set: &[usize]) -> Perm {
    let mut out = set.to_vec();
    out.extend((1..=n).filter(|x| !set.contains(x)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_word_round_trips() {
        for w in fixing_prefix(4, 0) {
            let word = reduced_word(&w);
            assert_eq!(word.len(), length(&w));
            assert_eq!(from_word(4, &word), w);
        }
    }

    #[test]
    fn compose_and_inverse() {
        let a = vec![2, 3, 1];
        let b = vec![1, 3, 2];
        assert_eq!(compose(&a, &inverse(&a)), identity(3));
        assert_eq!(compose(&a, &b), vec![2, 1, 3]);
        // s_1 s_2 is the 3-cycle 1 -> 2 -> 3 -> 1.
        assert_eq!(from_word(3, &[1, 2]), vec![2, 3, 1]);
    }

    #[test]
    fn subset_and_prefix_counts() {
        assert_eq!(subsets(5, 2).len(), 10);
        assert_eq!(subsets(3, 0), vec![Vec::<usize>::new()]);
        assert_eq!(fixing_prefix(4, 1).len(), 6);
        assert!(fixing_prefix(4, 1).iter().all(|w| w[0] == 1));
    }

    #[test]
    fn coset_rep_length() {
        let d = min_coset_rep(4, &[2, 4]);
        assert_eq!(d, vec![2, 4, 1, 3]);
        assert_eq!(length(&d), (2 - 1) + (4 - 2));
    }
}
