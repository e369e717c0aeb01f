//! Small named semigroups used by tests, examples and the acceptance suite.

use crate::semigroup::FiniteSemigroup;

fn named(s: FiniteSemigroup, names: &[&str]) -> FiniteSemigroup {
    s.with_names(Some(names.iter().map(|n| n.to_string()).collect()))
        .expect("name count matches order")
}

/// The one-element semigroup `{e}`.
pub fn trivial() -> FiniteSemigroup {
    named(FiniteSemigroup::from_fn(1, |_, _| 0).unwrap(), &["e"])
}

/// Chain semilattice on `n` elements; index 0 is the top, `n - 1` the
/// minimum, and `x * y = max(x, y)`.
pub fn chain_semilattice(n: usize) -> FiniteSemigroup {
    let s = FiniteSemigroup::from_fn(n, |x, y| x.max(y)).unwrap();
    if n <= 26 {
        let names: Vec<String> = (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect();
        s.with_names(Some(names)).unwrap()
    } else {
        s
    }
}

/// The two-element semilattice `{a, b}` with `b` the minimum.
pub fn semilattice2() -> FiniteSemigroup {
    chain_semilattice(2)
}

/// Cyclic group `Z/n`; index `k` is `g^k`, index 0 is the identity.
pub fn cyclic_group(n: usize) -> FiniteSemigroup {
    let s = FiniteSemigroup::from_fn(n, |x, y| (x + y) % n).unwrap();
    let names: Vec<String> = (0..n)
        .map(|k| match k {
            0 => "1".to_string(),
            1 => "g".to_string(),
            _ => format!("g{k}"),
        })
        .collect();
    s.with_names(Some(names)).unwrap()
}

/// `Z/n` with a zero adjoined (index `n`).
pub fn z_n_zero(n: usize) -> FiniteSemigroup {
    cyclic_group(n).adjoin_zero()
}

/// Two-element null semigroup `{n, 0}` with every product equal to `0`.
pub fn null_semigroup() -> FiniteSemigroup {
    named(FiniteSemigroup::from_fn(2, |_, _| 1).unwrap(), &["n", "0"])
}

/// `rows × cols` rectangular band; `(i, j)` has index `i * cols + j` and
/// `(i, j)(k, l) = (i, l)`.
pub fn rectangular_band(rows: usize, cols: usize) -> FiniteSemigroup {
    let s = FiniteSemigroup::from_fn(rows * cols, |p, q| (p / cols) * cols + q % cols).unwrap();
    let names = (0..rows * cols).map(|p| format!("r{}c{}", p / cols, p % cols)).collect();
    s.with_names(Some(names)).unwrap()
}

/// Left-zero semigroup on `n` elements: `x * y = x`.
pub fn left_zero(n: usize) -> FiniteSemigroup {
    rectangular_band(n, 1)
}

/// Monogenic semigroup `⟨a⟩` with index `index` and period `period`; index
/// `k` holds `a^{k+1}`.
pub fn monogenic(index: usize, period: usize) -> FiniteSemigroup {
    assert!(index >= 1 && period >= 1);
    let order = index + period - 1;
    let reduce = move |mut e: usize| {
        // e is an exponent >= 1
        if e >= index + period {
            e = index + (e - index) % period;
        }
        e
    };
    FiniteSemigroup::from_fn(order, |x, y| reduce(x + 1 + y + 1) - 1).unwrap()
}
