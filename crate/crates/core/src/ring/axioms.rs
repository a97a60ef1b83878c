//! Exact ring-axiom verification for operation tables.
//!
//! Commutativity, identities and inverses are checked pointwise. The
//! three-variable laws are checked with the third variable ranging over an
//! additive generating set `G`, which decides them exactly:
//!
//! * `(a+b)+g = a+(b+g)` for all `a, b` and `g ∈ G` implies associativity
//!   (Light's test: the set of good third arguments is closed under `+`).
//! * `a(b+g) = ab+ag` makes `b ↦ ab` additive once `+` is associative, so
//!   distributivity holds for every right summand.
//! * `(ab)g = a(bg)` compares two maps that are additive in `g`, so agreement
//!   on `G` gives agreement everywhere.
//!
//! The cost is `O(n² · |G|)` instead of `O(n³)`; `|G|` is the number of cyclic
//! factors needed to generate the additive group.

use crate::error::{Error, Result};

fn violation(axiom: &'static str, elements: &[usize]) -> Error {
    Error::AxiomViolation {
        axiom,
        elements: elements.to_vec(),
    }
}

/// Returns the negation table on success.
pub(crate) fn verify(n: usize, add: &[u32], mul: &[u32], zero: usize, one: usize) -> Result<Vec<u32>> {
    if n == 0 || add.len() != n * n || mul.len() != n * n {
        return Err(violation("table shape", &[n]));
    }
    if zero >= n || one >= n {
        return Err(violation("identity in range", &[zero, one]));
    }
    if zero == one {
        return Err(violation("one ≠ zero", &[one]));
    }
    if let Some(pos) = add.iter().chain(mul).position(|&v| v as usize >= n) {
        return Err(violation("closure", &[pos % (n * n) / n, pos % n]));
    }
    let add_at = |a: usize, b: usize| add[a * n + b] as usize;
    let mul_at = |a: usize, b: usize| mul[a * n + b] as usize;

    for a in 0..n {
        for b in (a + 1)..n {
            if add_at(a, b) != add_at(b, a) {
                return Err(violation("additive commutativity", &[a, b]));
            }
            if mul_at(a, b) != mul_at(b, a) {
                return Err(violation("multiplicative commutativity", &[a, b]));
            }
        }
    }
    for a in 0..n {
        if add_at(zero, a) != a {
            return Err(violation("additive identity", &[a]));
        }
        if mul_at(one, a) != a {
            return Err(violation("multiplicative identity", &[a]));
        }
    }
    let mut neg = vec![0u32; n];
    for a in 0..n {
        match (0..n).find(|&b| add_at(a, b) == zero) {
            Some(b) => neg[a] = b as u32,
            None => return Err(violation("additive inverse", &[a])),
        }
    }

    let gens = additive_generators(n, zero, &add_at);

    for &g in &gens {
        for a in 0..n {
            for b in 0..n {
                if add_at(add_at(a, b), g) != add_at(a, add_at(b, g)) {
                    return Err(violation("additive associativity", &[a, b, g]));
                }
            }
        }
    }
    for &g in &gens {
        for a in 0..n {
            let ag = mul_at(a, g);
            for b in 0..n {
                let ab = mul_at(a, b);
                if mul_at(a, add_at(b, g)) != add_at(ab, ag) {
                    return Err(violation("distributivity", &[a, b, g]));
                }
                if mul_at(ab, g) != mul_at(a, mul_at(b, g)) {
                    return Err(violation("multiplicative associativity", &[a, b, g]));
                }
            }
        }
    }
    Ok(neg)
}

/// Greedy generating set: scan elements in index order and keep each one not
/// yet reachable as a left-nested sum of the kept ones.
pub(crate) fn additive_generators(n: usize, zero: usize, add_at: &impl Fn(usize, usize) -> usize) -> Vec<usize> {
    let mut reached = vec![false; n];
    reached[zero] = true;
    let mut frontier_list = vec![zero];
    let mut gens = Vec::new();
    for e in 0..n {
        if reached[e] {
            continue;
        }
        gens.push(e);
        // Re-close over all generators: sums h + g for reached h.
        let mut queue = std::mem::take(&mut frontier_list);
        let mut i = 0;
        while i < queue.len() {
            let h = queue[i];
            i += 1;
            for &g in &gens {
                let s = add_at(h, g);
                if !reached[s] {
                    reached[s] = true;
                    queue.push(s);
                }
            }
        }
        frontier_list = queue;
    }
    gens
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zn_tables(n: usize) -> (Vec<u32>, Vec<u32>) {
        let mut add = vec![0; n * n];
        let mut mul = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                add[a * n + b] = ((a + b) % n) as u32;
                mul[a * n + b] = ((a * b) % n) as u32;
            }
        }
        (add, mul)
    }

    #[test]
    fn accepts_zn() {
        for n in 2..20 {
            let (add, mul) = zn_tables(n);
            assert!(verify(n, &add, &mul, 0, 1).is_ok(), "Z{n}");
        }
    }

    #[test]
    fn rejects_broken_distributivity() {
        // Z4 with 2·2 changed to 2: still commutative with the same identities.
        let (add, mut mul) = zn_tables(4);
        mul[2 * 4 + 2] = 2;
        let err = verify(4, &add, &mul, 0, 1).unwrap_err();
        assert!(matches!(err, Error::AxiomViolation { .. }));
    }

    #[test]
    fn rejects_noncommutative_table() {
        let (add, mut mul) = zn_tables(3);
        mul[3 + 2] = 0;
        let err = verify(3, &add, &mul, 0, 1).unwrap_err();
        assert_eq!(
            err,
            Error::AxiomViolation {
                axiom: "multiplicative commutativity",
                elements: vec![1, 2]
            }
        );
    }

    #[test]
    fn rejects_nonassociative_addition() {
        // Commutative loop of order 5 that is not a group.
        let t: [[u32; 5]; 5] = [
            [0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 3, 4, 0, 1],
            [3, 4, 0, 1, 0],
            [4, 2, 1, 0, 3],
        ];
        let add: Vec<u32> = t.iter().flatten().copied().collect();
        let (_, mul) = zn_tables(5);
        assert!(verify(5, &add, &mul, 0, 1).is_err());
    }

    #[test]
    fn zero_ring_rejected() {
        assert!(verify(1, &[0], &[0], 0, 0).is_err());
    }

    #[test]
    fn generators_of_klein_group() {
        // Z2 x Z2 encoded as 2a + b.
        let add_at = |a: usize, b: usize| a ^ b;
        assert_eq!(additive_generators(4, 0, &add_at), vec![1, 2]);
        let cyc = |a: usize, b: usize| (a + b) % 12;
        assert_eq!(additive_generators(12, 0, &cyc), vec![1]);
    }
}
