//! Buchberger completion for global orders and Mora's tangent-cone
//! algorithm for local orders, sharing one pair queue.


use super::svec::{SVec, Term};
use crate::poly::{Monomial, MonomialOrder};

/// Mora's weak normal form with ecart-minimizing reducer choice.
///
/// For global orders every ecart is zero and this is plain top reduction.
/// Intermediate remainders with smaller ecart than the chosen reducer are
/// admitted as reducers themselves, which is what makes the loop terminate
/// for local orders.
pub(crate) fn weak_normal_form(p: SVec, basis: &[SVec], ord: &MonomialOrder) -> SVec {
    let ecarts: Vec<i64> = basis.iter().map(|g| g.ecart(ord)).collect();
    let mut extra: Vec<(SVec, i64)> = Vec::new();
    let mut h = p;
    loop {
        if h.is_zero() {
            return h;
        }
        let lead = h.lead().clone();
        let mut best: Option<(usize, bool, i64)> = None;
        for (i, g) in basis.iter().enumerate() {
            if g.lead_divides(&lead) && best.is_none_or(|b| ecarts[i] < b.2) {
                best = Some((i, false, ecarts[i]));
            }
        }
        for (i, (g, e)) in extra.iter().enumerate() {
            if g.lead_divides(&lead) && best.is_none_or(|b| *e < b.2) {
                best = Some((i, true, *e));
            }
        }
        let Some((i, from_extra, eg)) = best else {
            return h;
        };
        let g = if from_extra { extra[i].0.clone() } else { basis[i].clone() };
        let eh = h.ecart(ord);
        if eg > eh {
            extra.push((h.clone(), eh));
        }
        h = h.reduce_lead_by(&g, ord);
    }
}

/// Full reduction for global orders: no term of the result is divisible by
/// a leading term of `basis`.
pub(crate) fn full_normal_form(p: SVec, basis: &[SVec], ord: &MonomialOrder) -> SVec {
    debug_assert!(ord.is_global());
    let mut rest = p;
    let mut done: Vec<Term> = Vec::new();
    while !rest.is_zero() {
        let lead = rest.lead().clone();
        match basis.iter().find(|g| g.lead_divides(&lead)) {
            Some(g) => rest = rest.reduce_lead_by(g, ord),
            None => {
                done.push(lead);
                rest.terms.remove(0);
            }
        }
    }
    SVec { terms: done }
}

/// Reduce every non-standard term of `p` for a local order, discarding terms
/// of ecart-degree above `bound`.
///
/// Valid when every monomial of degree above `bound` lies in the ideal, which
/// holds for a zero-dimensional standard basis whose staircase stays within
/// `bound`. The result is a combination of standard monomials only.
pub(crate) fn truncated_normal_form(p: SVec, basis: &[SVec], ord: &MonomialOrder, bound: i64) -> SVec {
    let cut = |v: SVec| SVec {
        terms: v
            .terms
            .into_iter()
            .filter(|t| ord.ecart_degree(&t.mono) <= bound)
            .collect(),
    };
    let mut work = cut(p);
    let mut start = 0;
    loop {
        let pos = work.terms[start..]
            .iter()
            .position(|t| basis.iter().any(|g| g.lead_divides(t)))
            .map(|k| k + start);
        let Some(k) = pos else {
            return work;
        };
        let t = work.terms[k].clone();
        let g = basis.iter().find(|g| g.lead_divides(&t)).unwrap();
        let m = g.lead().mono.quotient_of(&t.mono);
        let c = &t.coeff / &g.lead().coeff;
        work = cut(work.sub_scaled(&c, &m, g, ord));
        // terms before position k are standard and untouched by the reduction
        start = k;
    }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    degree: i64,
}

/// Complete `gens` to a standard basis (Gröbner basis for global orders).
///
/// Pairs are taken by the normal strategy: smallest lcm degree first, ties
/// broken by the lexicographically smallest lcm exponent vector, then by
/// index. The chain criterion prunes pairs for every rank; the product
/// criterion is applied only to ideals.
pub(crate) fn complete(gens: Vec<SVec>, ord: &MonomialOrder, ideal: bool) -> Vec<SVec> {
    let mut basis: Vec<SVec> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    for mut g in gens.into_iter().filter(|g| !g.is_zero()) {
        g.make_monic();
        add_element(&mut basis, &mut pairs, g, ord, ideal);
    }
    while let Some(pair) = take_next(&mut pairs) {
        let s = SVec::spoly(&basis[pair.i], &basis[pair.j], ord);
        let mut h = weak_normal_form(s, &basis, ord);
        if !h.is_zero() {
            h.make_monic();
            add_element(&mut basis, &mut pairs, h, ord, ideal);
        }
    }
    basis
}

fn take_next(pairs: &mut Vec<Pair>) -> Option<Pair> {
    let best = pairs
        .iter()
        .enumerate()
        .min_by(|(_, a), (_, b)| {
            a.degree
                .cmp(&b.degree)
                .then_with(|| a.lcm.cmp(&b.lcm))
                .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
        })
        .map(|(k, _)| k)?;
    Some(pairs.swap_remove(best))
}

fn add_element(
    basis: &mut Vec<SVec>,
    pairs: &mut Vec<Pair>,
    g: SVec,
    ord: &MonomialOrder,
    ideal: bool,
) {
    let k = basis.len();
    let lk = g.lead().clone();
    // Gebauer–Möller B_k: drop (i, j) when lt(k) | lcm(i, j) strictly inside
    pairs.retain(|p| {
        if basis[p.i].lead().comp != lk.comp || !lk.mono.divides(&p.lcm) {
            return true;
        }
        let lik = basis[p.i].lead().mono.lcm(&lk.mono);
        let ljk = basis[p.j].lead().mono.lcm(&lk.mono);
        lik == p.lcm || ljk == p.lcm
    });
    for (i, f) in basis.iter().enumerate() {
        let lf = f.lead();
        if lf.comp != lk.comp {
            continue;
        }
        if ideal && lf.mono.is_coprime(&lk.mono) {
            continue;
        }
        let lcm = lf.mono.lcm(&lk.mono);
        let degree = ord.ecart_degree(&lcm);
        pairs.push(Pair { i, j: k, lcm, degree });
    }
    basis.push(g);
}

/// Drop elements whose leading term is divisible by another's (first one
/// wins on equal leading terms).
pub(crate) fn minimalize(basis: Vec<SVec>) -> Vec<SVec> {
    let keep: Vec<bool> = (0..basis.len())
        .map(|i| {
            let li = basis[i].lead();
            !basis.iter().enumerate().any(|(j, g)| {
                j != i && g.lead_divides(li) && (g.lead().mono != li.mono || j < i)
            })
        })
        .collect();
    basis
        .into_iter()
        .zip(keep)
        .filter_map(|(g, k)| k.then_some(g))
        .collect()
}

/// Tail-reduce a minimal Gröbner basis (global orders only).
pub(crate) fn interreduce(basis: Vec<SVec>, ord: &MonomialOrder) -> Vec<SVec> {
    let mut out = basis.clone();
    for i in 0..out.len() {
        let others: Vec<SVec> = out
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let g = &out[i];
        let lead = SVec {
            terms: vec![g.lead().clone()],
        };
        let tail = SVec {
            terms: g.terms[1..].to_vec(),
        };
        let reduced_tail = full_normal_form(tail, &others, ord);
        let mut terms = lead.terms;
        terms.extend(reduced_tail.terms);
        out[i] = SVec { terms };
        out[i].make_monic();
    }
    out
}

/// In the local ring `m·u` with `u(0) ≠ 0` generates the same ideal as `m`.
pub(crate) fn strip_unit(g: SVec) -> SVec {
    let Some(comp) = g.single_component() else {
        return g;
    };
    let gcd = g
        .terms
        .iter()
        .fold(g.lead().mono.clone(), |acc, t| acc.gcd(&t.mono));
    if g.lead().mono != gcd {
        return g;
    }
    SVec {
        terms: vec![Term {
            comp,
            mono: gcd,
            coeff: num_traits::One::one(),
        }],
    }
}

/// Every S-polynomial of a same-component pair reduces to zero.
pub(crate) fn is_complete(basis: &[SVec], ord: &MonomialOrder) -> bool {
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            if basis[i].lead().comp != basis[j].lead().comp {
                continue;
            }
            let s = SVec::spoly(&basis[i], &basis[j], ord);
            if !weak_normal_form(s, basis, ord).is_zero() {
                return false;
            }
        }
    }
    true
}
