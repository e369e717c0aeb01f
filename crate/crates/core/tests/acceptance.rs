//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Reference values are recomputed here from the definitions
//! rather than taken from the library where practical.

use std::collections::{BTreeSet, HashMap};
use std::process::ExitCode;
use std::time::Instant;

use sgrp::analysis::{
    check_absorption, distance_one_equidivisibility, is_equidivisible, is_kr_cover, is_kr_cover_with, is_v_morphism,
    tower_coherence,
};
use sgrp::catalog;
use sgrp::freeprod::{separate, truncated_free_product, AlternatingForm, Separation};
use sgrp::{
    induced_hom, kr_expand, kr_tower, Budget, Element, FiniteSemigroup, GeneratingMap, Homomorphism, Identity,
    KrExpansion, Letter, Word,
};

type Outcome = Result<String, String>;

struct Instance {
    name: &'static str,
    s: FiniteSemigroup,
    phi: GeneratingMap,
}

fn instance(name: &'static str, s: FiniteSemigroup, targets: Option<Vec<Element>>) -> Instance {
    let phi = match targets {
        Some(t) => GeneratingMap::from_targets(&s, t).unwrap(),
        None => GeneratingMap::minimal(&s).unwrap(),
    };
    Instance { name, s, phi }
}

fn corpus() -> Vec<Instance> {
    let z2 = catalog::cyclic_group(2);
    vec![
        instance("trivial/a", catalog::trivial(), None),
        instance("trivial/ab", catalog::trivial(), Some(vec![0, 0])),
        instance("semilattice2", catalog::semilattice2(), None),
        instance("Z2", catalog::cyclic_group(2), None),
        instance("Z3", catalog::cyclic_group(3), None),
        instance("Z2^0", catalog::z_n_zero(2), None),
        instance("rectangular band 2x2", catalog::rectangular_band(2, 2), None),
        instance("left zero 2", catalog::left_zero(2), None),
        instance("null", catalog::null_semigroup(), None),
        instance("Rees Z2 2x1", FiniteSemigroup::rees_matrix(&z2, &[vec![0, 1]]).unwrap(), None),
        instance("monogenic(3,1)", catalog::monogenic(3, 1), None),
        instance("monogenic(2,2)", catalog::monogenic(2, 2), None),
    ]
}

/// Semigroups used for the KR-cover criteria.
fn cover_corpus() -> Vec<(&'static str, FiniteSemigroup)> {
    let z2 = catalog::cyclic_group(2);
    let mut out: Vec<(&'static str, FiniteSemigroup)> = corpus().into_iter().map(|i| (i.name, i.s)).collect();
    out.dedup_by(|a, b| a.0.starts_with("trivial") && b.0.starts_with("trivial"));
    out.push(("Z3^0", catalog::z_n_zero(3)));
    out.push(("rectangular band 2x3", catalog::rectangular_band(2, 3)));
    out.push(("Rees Z2 2x2", FiniteSemigroup::rees_matrix(&z2, &[vec![0, 0], vec![0, 1]]).unwrap()));
    out.push(("chain3", catalog::chain_semilattice(3)));
    out
}

fn expand(s: &FiniteSemigroup, phi: &GeneratingMap) -> KrExpansion {
    kr_expand(s, phi, &Budget::unlimited()).expect("expansion")
}

/// Two-sided Cayley graph from scratch: vertices `(S^I)²` with
/// `(s, φ(a)t) --a--> (sφ(a), t)`, mutual reachability by closure.
struct NaiveGraph {
    n1: usize,
    mutual: Vec<bool>,
}

impl NaiveGraph {
    fn new(s: &FiniteSemigroup, phi: &GeneratingMap) -> Self {
        let n1 = s.order() + 1;
        let v = n1 * n1;
        let mut reach = vec![false; v * v];
        for x in 0..v {
            reach[x * v + x] = true;
        }
        for s1 in 0..n1 {
            for t2 in 0..n1 {
                for &g in phi.targets() {
                    let from = s1 * n1 + s.mul_i(g, t2);
                    let to = s.mul_i(s1, g) * n1 + t2;
                    reach[from * v + to] = true;
                }
            }
        }
        for k in 0..v {
            for i in 0..v {
                if reach[i * v + k] {
                    for j in 0..v {
                        if reach[k * v + j] {
                            reach[i * v + j] = true;
                        }
                    }
                }
            }
        }
        let mutual = (0..v * v).map(|p| reach[p] && reach[(p % v) * v + p / v]).collect();
        Self { n1, mutual }
    }

    /// `(φ(u), transition edges of p_u)` with edges as `(source, letter, target)`.
    fn signature(&self, s: &FiniteSemigroup, phi: &GeneratingMap, u: &[Letter]) -> (Element, Vec<(usize, Letter, usize)>) {
        let n = u.len();
        let one = s.virtual_identity();
        let mut suffix = vec![one; n + 1];
        for i in (0..n).rev() {
            suffix[i] = s.mul_i(phi.target(u[i]), suffix[i + 1]);
        }
        let v = self.n1 * self.n1;
        let mut prefix = one;
        let mut edges = Vec::new();
        for i in 0..n {
            let from = prefix * self.n1 + suffix[i];
            prefix = s.mul_i(prefix, phi.target(u[i]));
            let to = prefix * self.n1 + suffix[i + 1];
            if !self.mutual[from * v + to] {
                edges.push((from, u[i], to));
            }
        }
        edges.sort_unstable();
        edges.dedup();
        (prefix, edges)
    }
}

fn for_each_word(k: usize, max_len: usize, mut f: impl FnMut(&[Letter])) {
    for len in 1..=max_len {
        let mut w = vec![0; len];
        'outer: loop {
            f(&w);
            for i in (0..len).rev() {
                w[i] += 1;
                if w[i] < k {
                    continue 'outer;
                }
                w[i] = 0;
            }
            break;
        }
    }
}

fn criterion_1() -> Outcome {
    let mut words_total = 0u64;
    let corpus = corpus();
    for inst in &corpus {
        let exp = expand(&inst.s, &inst.phi);
        let naive = NaiveGraph::new(&inst.s, &inst.phi);
        let l = exp.order() + 1;
        let mut by_sig: HashMap<(Element, Vec<(usize, Letter, usize)>), Element> = HashMap::new();
        let mut by_class: HashMap<Element, (Element, Vec<(usize, Letter, usize)>)> = HashMap::new();
        let mut bad = None;
        for_each_word(inst.phi.len(), l, |w| {
            words_total += 1;
            if bad.is_some() {
                return;
            }
            let sig = naive.signature(&inst.s, &inst.phi, w);
            let c = exp.letter_map().evaluate_slice(exp.result(), w);
            if *by_sig.entry(sig.clone()).or_insert(c) != c || *by_class.entry(c).or_insert_with(|| sig.clone()) != sig {
                bad = Some(w.to_vec());
            }
        });
        if let Some(w) = bad {
            return Err(format!("{}: partitions differ at word {w:?}", inst.name));
        }
        if by_sig.len() != exp.order() || by_class.len() != exp.order() {
            return Err(format!("{}: {} oracle classes vs order {}", inst.name, by_sig.len(), exp.order()));
        }
    }
    Ok(format!("{} instances, {} words enumerated", corpus.len(), words_total))
}

fn criterion_2() -> Outcome {
    let xyz: Identity = "xyz=xz".parse().unwrap();
    let corpus = corpus();
    for inst in &corpus {
        let exp = expand(&inst.s, &inst.phi);
        let mut bad = None;
        for_each_word(inst.phi.len(), 6, |w| {
            let c = exp.letter_map().evaluate_slice(exp.result(), w);
            if bad.is_none() && exp.projection().apply(c) != inst.phi.evaluate_slice(&inst.s, w) {
                bad = Some(w.to_vec());
            }
        });
        if let Some(w) = bad {
            return Err(format!("{}: π∘φ^KR ≠ φ at {w:?}", inst.name));
        }
        // fibers over idempotents, checked directly
        for e in inst.s.idempotents() {
            let fiber = exp.projection().fiber(e);
            for &x in &fiber {
                for &y in &fiber {
                    for &z in &fiber {
                        let t = exp.result();
                        if t.mul(t.mul(x, y), z) != t.mul(x, z) {
                            return Err(format!("{}: xyz ≠ xz in fiber over {e}", inst.name));
                        }
                    }
                }
            }
        }
        if !is_v_morphism(exp.result(), &inst.s, exp.projection(), &[xyz.clone()]).verdict {
            return Err(format!("{}: is_v_morphism rejected the projection", inst.name));
        }
    }
    Ok(format!("{} instances, words up to length 6", corpus.len()))
}

/// Refinement condition for `π: T → S` by direct scan of `t ∈ S^I`.
fn refines(s: &FiniteSemigroup, u: Element, v: Element, x: Element, y: Element) -> bool {
    s.elements_i().any(|t| (s.mul_i(u, t) == x && v == s.mul_i(t, y)) || (u == s.mul_i(x, t) && s.mul_i(t, v) == y))
}

fn criterion_3() -> Outcome {
    let mut expansions: Vec<(String, KrExpansion)> = Vec::new();
    for inst in corpus() {
        expansions.push((format!("{} (minimal map)", inst.name), expand(&inst.s, &inst.phi)));
    }
    for (name, s) in cover_corpus() {
        expansions.push((format!("{name} (identity map)"), expand(&s, &GeneratingMap::identity(&s))));
    }
    let mut checked = 0;
    for (name, exp) in expansions.iter().filter(|(_, e)| e.order() <= 60) {
        let t = exp.result();
        let s = exp.base();
        let pi = exp.projection();
        let report = distance_one_equidivisibility(t, s, pi.map());
        if !report.verdict {
            return Err(format!("{name}: {:?}", report.witness));
        }
        // independent recheck on the smaller ones
        if t.order() <= 30 {
            for u in t.elements() {
                for v in t.elements() {
                    for x in t.elements() {
                        for y in t.elements() {
                            if t.mul(u, v) == t.mul(x, y) && !refines(s, pi.apply(u), pi.apply(v), pi.apply(x), pi.apply(y)) {
                                return Err(format!("{name}: recheck fails at {:?}", (u, v, x, y)));
                            }
                        }
                    }
                }
            }
        }
        checked += 1;
    }
    Ok(format!("{checked} expansions of order ≤ 60"))
}

/// θ is a homomorphism and a section of the projection.
fn recheck_theta(s: &FiniteSemigroup, theta: &[Element]) -> bool {
    let exp = expand(s, &GeneratingMap::identity(s));
    let t = exp.result();
    s.elements().all(|x| exp.projection().apply(theta[x]) == x)
        && s.elements().all(|x| s.elements().all(|y| theta[s.mul(x, y)] == t.mul(theta[x], theta[y])))
}

fn criterion_4() -> Outcome {
    let z2 = catalog::cyclic_group(2);
    let cases = [
        ("semilattice2", catalog::semilattice2(), true),
        ("Z2^0", catalog::z_n_zero(2), false),
        ("Z3^0", catalog::z_n_zero(3), false),
        ("rectangular band 2x2", catalog::rectangular_band(2, 2), true),
        ("rectangular band 2x3", catalog::rectangular_band(2, 3), true),
        ("Rees Z2 2x2", FiniteSemigroup::rees_matrix(&z2, &[vec![0, 0], vec![0, 1]]).unwrap(), true),
    ];
    for (name, s, expected) in &cases {
        let r = is_kr_cover(s, &Budget::unlimited()).map_err(|e| format!("{name}: {e}"))?;
        if r.verdict != *expected {
            return Err(format!("{name}: got {}, expected {expected}", r.verdict));
        }
        if let Some(theta) = &r.theta {
            if !recheck_theta(s, theta) {
                return Err(format!("{name}: θ is not a section"));
            }
        }
    }
    Ok(format!("{} verdicts match", cases.len()))
}

fn equidivisible_naive(s: &FiniteSemigroup) -> bool {
    s.elements().all(|u| {
        s.elements().all(|v| {
            s.elements().all(|x| s.elements().all(|y| s.mul(u, v) != s.mul(x, y) || refines(s, u, v, x, y)))
        })
    })
}

fn criterion_5() -> Outcome {
    let mut covers = 0;
    let corpus = cover_corpus();
    for (name, s) in &corpus {
        let cover = is_kr_cover(s, &Budget::unlimited()).map_err(|e| format!("{name}: {e}"))?.verdict;
        if !cover {
            continue;
        }
        covers += 1;
        if !is_equidivisible(s).verdict || !equidivisible_naive(s) {
            return Err(format!("{name}: KR-cover but not equidivisible"));
        }
        if let Some(x) = s.elements().find(|&x| s.omega_power(x, 1) != x) {
            return Err(format!("{name}: KR-cover but {x}^(ω+1) ≠ {x}"));
        }
    }
    Ok(format!("{} instances, {covers} covers, no counterexamples", corpus.len()))
}

fn criterion_6() -> Outcome {
    let corpus = cover_corpus();
    for (name, s) in &corpus {
        let full = is_kr_cover(s, &Budget::unlimited()).map_err(|e| format!("{name}: {e}"))?;
        let min = GeneratingMap::minimal(s).unwrap();
        let small = is_kr_cover_with(s, &min, &Budget::unlimited()).map_err(|e| format!("{name}: {e}"))?;
        if full.verdict != small.verdict {
            return Err(format!("{name}: identity map says {}, minimal map says {}", full.verdict, small.verdict));
        }
    }
    Ok(format!("{} instances agree", corpus.len()))
}

fn criterion_7() -> Outcome {
    let s = catalog::semilattice2();
    let phi = GeneratingMap::identity(&s);
    let tower = kr_tower(&s, &phi, 2, &Budget::default()).map_err(|e| e.to_string())?;
    if !tower.is_complete() || tower.len() != 3 {
        return Err(format!("tower stopped at {} levels", tower.len()));
    }
    let coherence = tower_coherence(&tower);
    if !coherence.passed {
        return Err(format!("connecting maps: {:?}", coherence.failure));
    }
    let b = phi.letter_index("b").unwrap();
    let report = check_absorption(&tower, b, 6);
    if !report.passed {
        return Err(format!("absorption: {:?}", report.levels));
    }
    // z lies in the minimal ideal iff it lies in every principal ideal S^I x S^I
    for n in 0..tower.len() {
        let t = tower.level(n);
        let z = report.levels[n].z;
        for x in t.elements() {
            let right: BTreeSet<Element> = t.elements_i().map(|q| t.mul_i(x, q)).collect();
            if !right.iter().any(|&r| t.elements_i().any(|p| t.mul_i(p, r) == z)) {
                return Err(format!("level {n}: [b^ω] is not below {x}"));
            }
        }
    }
    let orders: Vec<usize> = (0..tower.len()).map(|n| tower.level(n).order()).collect();
    Ok(format!("level orders {orders:?}, words up to length 6"))
}

fn check_squares(
    name: &str,
    exp_s: &KrExpansion,
    exp_t: &KrExpansion,
    lambda: &Homomorphism,
    alpha: &[Word],
) -> Result<Homomorphism, String> {
    let big = induced_hom(exp_s, exp_t, lambda, alpha).map_err(|e| format!("{name}: {e}"))?;
    for x in exp_s.result().elements() {
        if exp_t.projection().apply(big.apply(x)) != lambda.apply(exp_s.projection().apply(x)) {
            return Err(format!("{name}: π_ψ∘Λ ≠ λ∘π_φ at {x}"));
        }
    }
    for (a, image) in alpha.iter().enumerate() {
        let lhs = big.apply(exp_s.letter_map().target(a));
        let rhs = exp_t.class_of(image).map_err(|e| e.to_string())?;
        if lhs != rhs {
            return Err(format!("{name}: Λ∘φ^KR ≠ ψ^KR∘α at letter {a}"));
        }
    }
    Ok(big)
}

fn criterion_8() -> Outcome {
    // identity
    let sl = catalog::semilattice2();
    let phi = GeneratingMap::identity(&sl);
    let exp_sl = expand(&sl, &phi);
    let letters: Vec<Word> = (0..phi.len()).map(Word::letter).collect();
    let id = check_squares("identity", &exp_sl, &exp_sl, &Homomorphism::identity(&sl), &letters)?;
    if !exp_sl.result().elements().all(|x| id.apply(x) == x) {
        return Err("identity case: Λ is not the identity".into());
    }

    // collapse onto the trivial semigroup
    let t = catalog::trivial();
    let psi = GeneratingMap::from_targets(&t, vec![0, 0]).unwrap();
    let exp_t = expand(&t, &psi);
    let collapse = Homomorphism::new(&sl, &t, vec![0, 0]).unwrap();
    check_squares("collapse", &exp_sl, &exp_t, &collapse, &letters)?;

    // a ↦ i^n a i^n into S^I, with i the adjoined identity
    let sli = sl.adjoin_identity();
    let one = sli.identity_element().unwrap();
    let mut letters_i = phi.letters().to_vec();
    letters_i.push("i".into());
    let mut targets_i = phi.targets().to_vec();
    targets_i.push(one);
    let psi_i = GeneratingMap::new(&sli, letters_i, targets_i).unwrap();
    let exp_i = expand(&sli, &psi_i);
    let n = exp_i.result().exponent();
    let i_letter = phi.len();
    let alpha: Vec<Word> = (0..phi.len())
        .map(|a| Word::letter(i_letter).repeat(n).concat(&Word::letter(a)).concat(&Word::letter(i_letter).repeat(n)))
        .collect();
    let inclusion = Homomorphism::new(&sl, &sli, sl.elements().collect()).unwrap();
    let big = check_squares("b^n a b^n", &exp_sl, &exp_i, &inclusion, &alpha)?;
    let ti = exp_i.result();
    let z = ti.omega(exp_i.letter_map().target(i_letter));
    for x in exp_sl.result().elements() {
        let y = big.apply(x);
        if ti.mul(ti.mul(z, y), z) != y {
            return Err(format!("b^n a b^n: Λ({x}) not in zTz"));
        }
    }
    Ok(format!("3 instances, n = {n}"))
}

fn criterion_9() -> Outcome {
    let e = catalog::trivial();
    let p = truncated_free_product(&[e.clone(), e.clone()], 3).map_err(|e| e.to_string())?;
    if p.result().order() != 7 {
        return Err(format!("two trivial factors, cap 3: order {}", p.result().order()));
    }
    if !p.embeddings().iter().all(Homomorphism::is_injective) {
        return Err("an embedding is not injective".into());
    }
    let form = |v: Vec<(usize, Element)>| AlternatingForm::new(v).unwrap();
    let separated = |u: &AlternatingForm, v: &AlternatingForm, f: &[FiniteSemigroup]| match separate(u, v, f) {
        Ok(Separation::Separated { product, u, v }) => {
            u != v && u != product.zero() && v != product.zero()
        }
        _ => false,
    };
    let ee = [e.clone(), e.clone()];
    if !separated(&form(vec![(0, 0), (1, 0)]), &form(vec![(1, 0), (0, 0)]), &ee) {
        return Err("e1e2 and e2e1 not separated".into());
    }
    let ge = [catalog::cyclic_group(2), e];
    let g = ge[0].element_by_name("g").unwrap();
    let one = ge[0].element_by_name("1").unwrap();
    if !separated(&form(vec![(0, g), (1, 0), (0, g)]), &form(vec![(0, g), (1, 0), (0, one)]), &ge) {
        return Err("geg and ge1 not separated".into());
    }
    Ok("order 7, embeddings injective, both pairs separated".into())
}

fn criterion_10() -> Outcome {
    let mut probed = Vec::new();
    for (name, s) in cover_corpus() {
        if !is_kr_cover(&s, &Budget::unlimited()).map_err(|e| format!("{name}: {e}"))?.verdict {
            continue;
        }
        let si = s.adjoin_identity();
        let r = is_kr_cover(&si, &Budget::unlimited()).map_err(|e| format!("{name}^I: {e}"))?;
        if !r.verdict {
            return Err(format!("{name}^I is not a KR-cover"));
        }
        probed.push(format!("{name}^I ({})", r.expansion_order));
    }
    Ok(format!("{} adjunctions: {}", probed.len(), probed.join(", ")))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("expansion equals brute-force word partition", criterion_1),
        ("projection commutes with letters; fibers satisfy xyz=xz", criterion_2),
        ("distance-one equidivisibility of expansions", criterion_3),
        ("KR-cover verdicts", criterion_4),
        ("KR-cover implies equidivisible and union of groups", criterion_5),
        ("KR-cover verdict independent of generating map", criterion_6),
        ("semilattice tower absorption", criterion_7),
        ("induced homomorphisms commute", criterion_8),
        ("truncated free products", criterion_9),
        ("adjoining an identity preserves KR-covers", criterion_10),
    ];
    let mut failed = 0;
    for (i, (title, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {title}: {detail} [{secs:.2}s]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {title}: {detail} [{secs:.2}s]", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
