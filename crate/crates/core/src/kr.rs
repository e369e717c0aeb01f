//! The two-sided Karnofsky–Rhodes expansion `S_φ^KR = A⁺/≡_φ`, where
//! `u ≡_φ v` iff `φ(u) = φ(v)` and the paths `p_u`, `p_v` use the same
//! transition edges of the two-sided Cayley graph.

use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

use crate::alphabet::{all_words, AlphabetError, GeneratingMap, Letter, Word};
use crate::budget::{Budget, BudgetError, Meter};
use crate::cayley::{CayleyError, TwoSidedCayleyGraph};
use crate::hom::{HomError, Homomorphism};
use crate::semigroup::{Element, FiniteSemigroup, SemigroupError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KrError {
    #[error(transparent)]
    Alphabet(#[from] AlphabetError),
    #[error(transparent)]
    Budget(#[from] BudgetError),
    #[error("hypothesis λ∘φ = ψ∘α fails at letter {letter:?}")]
    HypothesisViolated { letter: String },
    #[error("letter map has {got} entries, alphabet has {expected}")]
    LetterMapSize { expected: usize, got: usize },
    #[error("expansion table failed validation: {0}")]
    Table(#[from] SemigroupError),
    #[error("induced map is not a homomorphism: {0}")]
    Hom(#[from] HomError),
}

impl From<CayleyError> for KrError {
    fn from(e: CayleyError) -> Self {
        match e {
            CayleyError::Alphabet(a) => KrError::Alphabet(a),
        }
    }
}

/// `(φ(u), T(p_u))`; two words are `≡_φ`-equivalent iff their signatures are
/// equal. The transition set is kept as sorted slots into the graph's
/// transition edges; a path crosses few of them.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KrSignature {
    pub image: Element,
    pub tset: Vec<u32>,
}

impl KrSignature {
    /// Slots (into [`TwoSidedCayleyGraph::transition_edges`]) of the edges in the set.
    pub fn transition_slots(&self) -> Vec<usize> {
        self.tset.iter().map(|&i| i as usize).collect()
    }
}

pub fn signature(graph: &TwoSidedCayleyGraph, u: &Word) -> Result<KrSignature, KrError> {
    graph.validate_word(u.letters())?;
    Ok(signature_unchecked(graph, u.letters()))
}

fn signature_unchecked(graph: &TwoSidedCayleyGraph, u: &[Letter]) -> KrSignature {
    KrSignature {
        image: graph.generating_map().evaluate_slice(graph.semigroup(), u),
        tset: graph.transition_slots_of(u),
    }
}

/// A computed expansion together with its letter map and projection.
#[derive(Debug, Clone)]
pub struct KrExpansion {
    graph: TwoSidedCayleyGraph,
    result: FiniteSemigroup,
    letter_map: GeneratingMap,
    projection: Homomorphism,
    representatives: Vec<Word>,
    signatures: Vec<KrSignature>,
}

/// Largest expansion whose dense table is built (about 1.6 GB of `u32`).
pub const KR_ORDER_LIMIT: usize = 20_000;

/// Computes `S_φ^KR` by breadth-first search over signatures.
///
/// Classes are discovered from the letters, then from `[w]` by each letter
/// `a` via the signature of `wa`; each class keeps the word that first
/// reached it. Every signature evaluation counts as one budget step.
pub fn kr_expand(s: &FiniteSemigroup, phi: &GeneratingMap, budget: &Budget) -> Result<KrExpansion, KrError> {
    let graph = TwoSidedCayleyGraph::build(s, phi)?;
    kr_expand_graph(graph, budget)
}

pub fn kr_expand_graph(graph: TwoSidedCayleyGraph, budget: &Budget) -> Result<KrExpansion, KrError> {
    expand_metered(graph, &mut budget.meter())
}

fn expand_metered(graph: TwoSidedCayleyGraph, meter: &mut Meter<'_>) -> Result<KrExpansion, KrError> {
    let k = graph.generating_map().len();
    let mut index: HashMap<KrSignature, usize> = HashMap::new();
    let mut representatives: Vec<Word> = Vec::new();
    let mut signatures: Vec<KrSignature> = Vec::new();
    // parent class and last letter of each representative, for table filling
    let mut parent: Vec<Option<(usize, Letter)>> = Vec::new();

    let mut letter_class = Vec::with_capacity(k);
    for a in 0..k {
        meter.tick(1)?;
        let sig = signature_unchecked(&graph, &[a]);
        let c = *index.entry(sig.clone()).or_insert_with(|| {
            representatives.push(Word::letter(a));
            signatures.push(sig);
            parent.push(None);
            representatives.len() - 1
        });
        letter_class.push(c);
    }

    let mut right: Vec<u32> = Vec::new();
    let mut next = 0;
    while next < representatives.len() {
        let c = next;
        next += 1;
        for a in 0..k {
            meter.tick(1)?;
            let w = representatives[c].pushed(a);
            let sig = signature_unchecked(&graph, w.letters());
            let d = match index.get(&sig) {
                Some(&d) => d,
                None => {
                    let d = representatives.len();
                    index.insert(sig.clone(), d);
                    representatives.push(w);
                    signatures.push(sig);
                    parent.push(Some((c, a)));
                    d
                }
            };
            right.push(d as u32);
        }
    }

    let m = representatives.len();
    if m > KR_ORDER_LIMIT {
        return Err(BudgetError::TooLarge { order: m, limit: KR_ORDER_LIMIT }.into());
    }
    // [c]·[d] = [c]·[parent(d)]·a, so rows fill in discovery order of d.
    let mut table = vec![0u32; m * m];
    for c in 0..m {
        for d in 0..m {
            let v = match parent[d] {
                None => right[c * k + representatives[d].letters()[0]],
                Some((p, a)) => right[table[c * m + p] as usize * k + a],
            };
            table[c * m + d] = v;
        }
    }
    let s = graph.semigroup();
    let names: Vec<String> = representatives.iter().map(|w| format!("[{}]", graph.generating_map().format_word(w.letters()))).collect();
    let result = FiniteSemigroup::from_flat_unchecked(m, table)?.with_names(Some(names))?;
    result.check_associative_with_generators(&letter_class)?;
    let letter_map = GeneratingMap::unvalidated(graph.generating_map().letters().to_vec(), letter_class)?;
    let projection = Homomorphism::new_unchecked(signatures.iter().map(|sig| sig.image).collect(), s.order());
    projection.check_multiplicative(&result, s)?;
    Ok(KrExpansion { graph, result, letter_map, projection, representatives, signatures })
}

impl KrExpansion {
    pub fn result(&self) -> &FiniteSemigroup {
        &self.result
    }

    pub fn order(&self) -> usize {
        self.result.order()
    }

    pub fn base(&self) -> &FiniteSemigroup {
        self.graph.semigroup()
    }

    pub fn base_map(&self) -> &GeneratingMap {
        self.graph.generating_map()
    }

    pub fn graph(&self) -> &TwoSidedCayleyGraph {
        &self.graph
    }

    /// `φ^KR` on letters, as a generating map of the expansion.
    pub fn letter_map(&self) -> &GeneratingMap {
        &self.letter_map
    }

    /// `π_φ`.
    pub fn projection(&self) -> &Homomorphism {
        &self.projection
    }

    pub fn representatives(&self) -> &[Word] {
        &self.representatives
    }

    pub fn representative(&self, c: Element) -> &Word {
        &self.representatives[c]
    }

    pub fn class_signature(&self, c: Element) -> &KrSignature {
        &self.signatures[c]
    }

    /// `φ^KR(u)`, by multiplying letter classes in the expansion.
    pub fn class_of(&self, u: &Word) -> Result<Element, KrError> {
        self.letter_map.check_word(u)?;
        Ok(self.letter_map.evaluate(&self.result, u))
    }

    /// Class with the given signature, if some word has it.
    pub fn class_with_signature(&self, sig: &KrSignature) -> Option<Element> {
        self.signatures.iter().position(|s| s == sig)
    }
}

/// Partition of all words of length at most `max_len` by signature,
/// obtained by brute-force enumeration.
#[derive(Debug, Clone)]
pub struct OracleClasses {
    pub classes: Vec<Vec<Word>>,
    pub signatures: Vec<KrSignature>,
}

pub fn oracle_classes(s: &FiniteSemigroup, phi: &GeneratingMap, max_len: usize) -> Result<OracleClasses, KrError> {
    let graph = TwoSidedCayleyGraph::build(s, phi)?;
    Ok(oracle_classes_on(&graph, max_len))
}

/// Calls `f(word, signature)` for every word of length `1..=max_len` in
/// shortlex order, without storing them.
pub fn oracle_visit(graph: &TwoSidedCayleyGraph, max_len: usize, mut f: impl FnMut(&[Letter], KrSignature)) {
    let k = graph.generating_map().len();
    if k == 0 {
        return;
    }
    for len in 1..=max_len {
        let mut w = vec![0; len];
        loop {
            f(&w, signature_unchecked(graph, &w));
            let mut i = len;
            while i > 0 && w[i - 1] == k - 1 {
                w[i - 1] = 0;
                i -= 1;
            }
            if i == 0 {
                break;
            }
            w[i - 1] += 1;
        }
    }
}

pub fn oracle_classes_on(graph: &TwoSidedCayleyGraph, max_len: usize) -> OracleClasses {
    let mut index: HashMap<KrSignature, usize> = HashMap::new();
    let mut classes: Vec<Vec<Word>> = Vec::new();
    let mut signatures = Vec::new();
    for w in all_words(graph.generating_map().len(), max_len) {
        let sig = signature_unchecked(graph, w.letters());
        let slot = *index.entry(sig.clone()).or_insert_with(|| {
            classes.push(Vec::new());
            signatures.push(sig);
            classes.len() - 1
        });
        classes[slot].push(w);
    }
    OracleClasses { classes, signatures }
}

/// Result of comparing an expansion with the brute-force partition of all
/// words of length at most `max_len`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleComparison {
    pub max_len: usize,
    pub words: u64,
    /// Expansion classes hit by some enumerated word.
    pub classes_seen: usize,
    pub order: usize,
    /// Two words identified by exactly one of the two partitions.
    pub mismatch: Option<(Vec<Letter>, Vec<Letter>)>,
}

impl OracleComparison {
    /// The partitions agree and every class was reached.
    pub fn matches(&self) -> bool {
        self.mismatch.is_none() && self.classes_seen == self.order
    }
}

/// Enumerates words by signature and checks that signature equality
/// coincides with equality in the expansion's table.
pub fn compare_with_oracle(exp: &KrExpansion, max_len: usize) -> OracleComparison {
    let mut by_sig: HashMap<KrSignature, (Element, Vec<Letter>)> = HashMap::new();
    let mut by_class: Vec<Option<(KrSignature, Vec<Letter>)>> = vec![None; exp.order()];
    let mut words = 0;
    let mut mismatch = None;
    oracle_visit(exp.graph(), max_len, |w, sig| {
        words += 1;
        if mismatch.is_some() {
            return;
        }
        let c = exp.letter_map.evaluate_slice(&exp.result, w);
        match by_sig.get(&sig) {
            Some((d, first)) if *d != c => mismatch = Some((first.clone(), w.to_vec())),
            Some(_) => {}
            None => {
                by_sig.insert(sig.clone(), (c, w.to_vec()));
            }
        }
        match &by_class[c] {
            Some((other, first)) if *other != sig => mismatch = Some((first.clone(), w.to_vec())),
            Some(_) => {}
            None => by_class[c] = Some((sig, w.to_vec())),
        }
    });
    OracleComparison {
        max_len,
        words,
        classes_seen: by_class.iter().filter(|c| c.is_some()).count(),
        order: exp.order(),
        mismatch,
    }
}

/// The homomorphism `Λ: S_φ^KR → T_ψ^KR` induced by `λ: S → T` and the
/// letter substitution `α: A → B⁺`, given `λ∘φ = ψ∘α` on letters.
///
/// `Λ([w]) = [α(w)]`, evaluated on class representatives and then checked to
/// be a homomorphism.
pub fn induced_hom(
    exp_s: &KrExpansion,
    exp_t: &KrExpansion,
    lambda: &Homomorphism,
    alpha: &[Word],
) -> Result<Homomorphism, KrError> {
    let phi = exp_s.base_map();
    let psi = exp_t.base_map();
    if alpha.len() != phi.len() {
        return Err(KrError::LetterMapSize { expected: phi.len(), got: alpha.len() });
    }
    for (a, image) in alpha.iter().enumerate() {
        psi.check_word(image)?;
        if lambda.apply(phi.target(a)) != psi.evaluate(exp_t.base(), image) {
            return Err(KrError::HypothesisViolated { letter: phi.letter_name(a).to_string() });
        }
    }
    let map = exp_s
        .representatives()
        .iter()
        .map(|w| {
            let letters: Vec<Letter> = w.letters().iter().flat_map(|&a| alpha[a].letters().iter().copied()).collect();
            exp_t.class_of(&Word::new(letters).expect("images are nonempty"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Homomorphism::new(exp_s.result(), exp_t.result(), map)?)
}

/// Levels `S_φ^{KR^n}`, `n = 0..`, with onto connecting maps
/// `ρ_{n+1,n}: level n+1 → level n`.
#[derive(Debug, Clone)]
pub struct KrTower {
    levels: Vec<(FiniteSemigroup, GeneratingMap)>,
    connecting: Vec<Homomorphism>,
    requested_depth: usize,
    exhausted: Option<BudgetError>,
}

/// Iterates the expansion `depth` times. The budget is shared across levels;
/// when it runs out the tower built so far is returned with
/// [`KrTower::budget_error`] set.
pub fn kr_tower(s: &FiniteSemigroup, phi: &GeneratingMap, depth: usize, budget: &Budget) -> Result<KrTower, KrError> {
    let phi = GeneratingMap::new(s, phi.letters().to_vec(), phi.targets().to_vec())?;
    let mut levels = vec![(s.clone(), phi)];
    let mut connecting = Vec::new();
    let mut exhausted = None;
    let mut meter = budget.meter();
    for _ in 0..depth {
        let (base, map) = levels.last().unwrap();
        let graph = TwoSidedCayleyGraph::build_unchecked(base, map);
        match expand_metered(graph, &mut meter) {
            Ok(exp) => {
                connecting.push(exp.projection);
                levels.push((exp.result, exp.letter_map));
            }
            Err(KrError::Budget(e)) => {
                exhausted = Some(e);
                break;
            }
            Err(e) => return Err(e),
        }
    }
    Ok(KrTower { levels, connecting, requested_depth: depth, exhausted })
}

impl KrTower {
    /// Number of levels actually built (`depth + 1` when complete).
    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    pub fn requested_depth(&self) -> usize {
        self.requested_depth
    }

    pub fn is_complete(&self) -> bool {
        self.exhausted.is_none()
    }

    pub fn budget_error(&self) -> Option<&BudgetError> {
        self.exhausted.as_ref()
    }

    pub fn level(&self, n: usize) -> &FiniteSemigroup {
        &self.levels[n].0
    }

    /// `φ^{KR^n}` on letters.
    pub fn level_map(&self, n: usize) -> &GeneratingMap {
        &self.levels[n].1
    }

    /// `ρ_{n+1,n}`.
    pub fn connecting(&self, n: usize) -> &Homomorphism {
        &self.connecting[n]
    }

    /// `ρ_{m,n} = ρ_{n+1,n} ∘ … ∘ ρ_{m,m-1}` for `m >= n`.
    pub fn rho(&self, m: usize, n: usize) -> Homomorphism {
        assert!(m >= n && m < self.levels.len(), "rho needs n <= m < len");
        let mut h = Homomorphism::identity(self.level(m));
        for j in (n..m).rev() {
            h = h.then(&self.connecting[j]);
        }
        h
    }

    /// `[w]_n`.
    pub fn class_at(&self, n: usize, w: &Word) -> Element {
        self.levels[n].1.evaluate(&self.levels[n].0, w)
    }
}
