//! Chromatic polynomials by deletion-contraction.

use num_bigint::BigInt;

use super::SimpleGraph;
use crate::poly::QPolynomial;

/// `chi_G(t)` as a signed polynomial in `t`.
pub fn chromatic_polynomial(g: &SimpleGraph) -> QPolynomial {
    let n = g.n();
    let alive = if n == 64 { !0 } else { (1u64 << n) - 1 };
    let coeffs = delete_contract(g.masks().to_vec(), alive);
    QPolynomial::from_coeffs(coeffs.into_iter().map(BigInt::from).collect())
}

/// `t (t - 1) ... (t - k + 1)`, the chromatic polynomial of `K_k`.
fn falling_factorial(k: usize) -> Vec<i128> {
    let mut p = vec![1i128];
    for c in 0..k as i128 {
        // multiply by (t - c)
        let mut next = vec![0i128; p.len() + 1];
        for (i, &a) in p.iter().enumerate() {
            next[i + 1] += a;
            next[i] -= c * a;
        }
        p = next;
    }
    p
}

fn delete_contract(mut adj: Vec<u64>, alive: u64) -> Vec<i128> {
    let k = alive.count_ones() as usize;
    let mut isolated = 0;
    let mut edge = None;
    let mut complete = true;
    let mut rest = alive;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let nb = adj[v] & alive;
        if nb == 0 {
            isolated += 1;
        } else if edge.is_none() {
            edge = Some((v, nb.trailing_zeros() as usize));
        }
        if nb.count_ones() as usize != k - 1 {
            complete = false;
        }
    }
    if complete {
        return falling_factorial(k);
    }
    let Some((u, v)) = edge else {
        let mut p = vec![0i128; k + 1];
        p[k] = 1;
        return p;
    };
    if isolated > 0 {
        // split off isolated vertices as a factor t^isolated
        let connected = (0..adj.len())
            .filter(|&x| alive >> x & 1 == 1 && adj[x] & alive != 0)
            .fold(0u64, |acc, x| acc | 1 << x);
        let mut p = delete_contract(adj, connected);
        p.splice(0..0, std::iter::repeat_n(0, isolated));
        return p;
    }

    // contraction: merge v into u, collapsing parallel edges
    let mut contracted = adj.clone();
    let merged = (contracted[u] | contracted[v]) & !(1 << u) & !(1 << v);
    contracted[u] = merged;
    for (x, nb) in contracted.iter_mut().enumerate() {
        if merged >> x & 1 == 1 {
            *nb = (*nb & !(1 << v)) | 1 << u;
        }
    }
    let without = delete_contract(contracted, alive & !(1 << v));

    adj[u] &= !(1 << v);
    adj[v] &= !(1 << u);
    let mut with = delete_contract(adj, alive);

    for (i, c) in without.into_iter().enumerate() {
        with[i] -= c;
    }
    while with.last() == Some(&0) {
        with.pop();
    }
    with
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::count_acyclic_orientations;

    /// Proper colorings counted by brute force over all `t^n` assignments.
    fn colorings(g: &SimpleGraph, t: u64) -> u64 {
        let n = g.n();
        let edges = g.edges();
        let mut count = 0;
        for code in 0..t.pow(n as u32) {
            let colors: Vec<u64> = (0..n).map(|i| code / t.pow(i as u32) % t).collect();
            if edges.iter().all(|&(a, b)| colors[a - 1] != colors[b - 1]) {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn classical_examples() {
        assert_eq!(
            chromatic_polynomial(&SimpleGraph::new(3).unwrap()),
            QPolynomial::monomial(3)
        );
        let k3 = QPolynomial::linear(0, 1) * QPolynomial::linear(-1, 1) * QPolynomial::linear(-2, 1);
        assert_eq!(chromatic_polynomial(&SimpleGraph::complete(3)), k3);
        assert_eq!(chromatic_polynomial(&SimpleGraph::new(0).unwrap()), QPolynomial::one());
        // C_4: (t-1)^4 + (t-1)
        let c4 = QPolynomial::from_i64s(&[0, -3, 6, -4, 1]);
        assert_eq!(chromatic_polynomial(&SimpleGraph::cycle(4)), c4);
    }

    #[test]
    fn counts_colorings_on_small_graphs() {
        for n in 1..=4 {
            for g in SimpleGraph::all_graphs(n) {
                let chi = chromatic_polynomial(&g);
                for t in 1..=4 {
                    assert_eq!(chi.eval_i64(t as i64), BigInt::from(colorings(&g, t)), "{g}");
                }
            }
        }
    }

    #[test]
    fn value_at_minus_one_counts_regions() {
        for n in 1..=5 {
            for g in SimpleGraph::all_graphs(n) {
                let chi = chromatic_polynomial(&g);
                let sign = if n % 2 == 0 { 1 } else { -1 };
                assert_eq!(
                    chi.eval_i64(-1) * sign,
                    BigInt::from(count_acyclic_orientations(&g)),
                    "{g}"
                );
            }
        }
    }

    #[test]
    fn falling_factorials() {
        assert_eq!(falling_factorial(0), vec![1]);
        assert_eq!(falling_factorial(3), vec![0, 2, -3, 1]);
    }
}
