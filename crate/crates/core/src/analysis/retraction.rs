use std::collections::BTreeSet;

use serde::Serialize;

use super::morphism::is_aperiodic_morphism;
use super::AnalysisError;
use crate::hom::Homomorphism;
use crate::semigroup::{Element, FiniteSemigroup};

/// A subsemigroup `K'` of the source on which `π` restricts to an
/// isomorphism onto `K`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Retraction {
    /// The regular J-class of the source lying over `K`.
    pub j_class: Vec<Element>,
    /// Sorted elements of `K'`.
    pub subsemigroup: Vec<Element>,
    /// `(k, k')` with `π(k') = k`, sorted by `k`.
    pub lift: Vec<(Element, Element)>,
}

/// Builds `K'` for a J-class subsemigroup `K` of the target of an aperiodic
/// onto morphism `π: S → T`.
///
/// Picks a regular J-class `J` of `S` with `π(J) = K` lying below all of
/// `π⁻¹(K)`, lifts a fixed idempotent `e ∈ K` to `γ_e ∈ J`, lifts the
/// idempotents R-equivalent to `e` to `γ_f` with `γ_e γ_f = γ_f` and the
/// L-equivalent ones to `γ_f` with `γ_f γ_e = γ_f`, and closes the union of
/// their H-classes under products.
pub fn cs_retraction(
    s: &FiniteSemigroup,
    t: &FiniteSemigroup,
    pi: &Homomorphism,
    k: &[Element],
) -> Result<Retraction, AnalysisError> {
    if let Some(x) = t.elements().find(|&x| !pi.map().contains(&x)) {
        return Err(AnalysisError::NotOnto(x));
    }
    if let Err((idempotent, element)) = is_aperiodic_morphism(s, t, pi) {
        return Err(AnalysisError::NotAMorphismOfRequiredKind { idempotent, element });
    }
    let k_set: BTreeSet<Element> = k.iter().copied().collect();
    let k_sorted: Vec<Element> = k_set.iter().copied().collect();
    let tg = t.greens();
    let Some(&first) = k_sorted.first() else {
        return Err(AnalysisError::NotAJClassSubsemigroup("empty subset".into()));
    };
    let mut class = tg.j_classes[tg.j_class_of(first)].clone();
    class.sort_unstable();
    if class != k_sorted {
        return Err(AnalysisError::NotAJClassSubsemigroup("not a J-class".into()));
    }
    if !t.is_subsemigroup(&k_sorted) {
        return Err(AnalysisError::NotAJClassSubsemigroup("not closed under products".into()));
    }

    let sg = s.greens();
    let over_k: Vec<Element> = s.elements().filter(|&x| k_set.contains(&pi.apply(x))).collect();
    let j = (0..sg.j_classes.len())
        .find(|&j| {
            let members = &sg.j_classes[j];
            let image: BTreeSet<Element> = members.iter().map(|&x| pi.apply(x)).collect();
            sg.j_regular[j] && image == k_set && over_k.iter().all(|&x| sg.j_below(members[0], x))
        })
        .ok_or_else(|| AnalysisError::ConstructionFailed("no regular J-class lies over K below its preimage".into()))?;
    let j_class = sg.j_classes[j].clone();
    let idempotents_in_j: Vec<Element> = j_class.iter().copied().filter(|&x| s.is_idempotent(x)).collect();

    let e = *k_sorted
        .iter()
        .find(|&&x| t.is_idempotent(x))
        .ok_or_else(|| AnalysisError::NotAJClassSubsemigroup("contains no idempotent".into()))?;
    let gamma_e = *idempotents_in_j
        .iter()
        .find(|&&g| pi.apply(g) == e)
        .ok_or_else(|| AnalysisError::ConstructionFailed(format!("no idempotent of J lies over {e}")))?;

    let mut gammas = vec![gamma_e];
    for &f in &k_sorted {
        if f == e || !t.is_idempotent(f) {
            continue;
        }
        let r = tg.r_equivalent(e, f);
        let l = tg.l_equivalent(e, f);
        if !r && !l {
            continue;
        }
        let lift = idempotents_in_j.iter().copied().find(|&g| {
            pi.apply(g) == f && (!r || s.mul(gamma_e, g) == g) && (!l || s.mul(g, gamma_e) == g)
        });
        gammas.push(lift.ok_or_else(|| AnalysisError::ConstructionFailed(format!("idempotent {f} has no lift")))?);
    }

    let mut seed = Vec::new();
    for &g in &gammas {
        seed.extend(sg.h_classes[sg.h_class_of(g)].iter().copied());
    }
    let subsemigroup = s.closure(&seed);
    let mut lift: Vec<(Element, Element)> = subsemigroup.iter().map(|&x| (pi.apply(x), x)).collect();
    lift.sort_unstable();
    let image: Vec<Element> = lift.iter().map(|&(k, _)| k).collect();
    if image != k_sorted {
        return Err(AnalysisError::ConstructionFailed(
            "restriction of π to the constructed subsemigroup is not a bijection onto K".into(),
        ));
    }
    Ok(Retraction { j_class, subsemigroup, lift })
}
