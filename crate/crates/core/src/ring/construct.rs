use super::{atomic_label, Elem, FiniteRing, Ideal, DEFAULT_MAX_RING_SIZE};
use crate::error::{Error, Result};

/// The integers modulo `n`, with index `i` representing the residue `i`.
pub fn make_zn(n: usize) -> Result<FiniteRing> {
    make_zn_capped(n, DEFAULT_MAX_RING_SIZE)
}

pub(crate) fn make_zn_capped(n: usize, cap: usize) -> Result<FiniteRing> {
    if n < 2 {
        return Err(Error::InvalidConstruction(format!("Z{n}: modulus must be at least 2")));
    }
    if n > cap {
        return Err(Error::capacity(format!("Z{n}"), n, cap));
    }
    FiniteRing::from_fn(
        format!("Z{n}"),
        n,
        1,
        |a, b| (a + b) % n,
        |a, b| (a * b) % n,
        (0..n).map(|i| i.to_string()).collect(),
    )
}

/// Componentwise product `R x S`; the pair `(a, b)` has index `a*|S| + b`.
pub fn make_product(r: &FiniteRing, s: &FiniteRing) -> Result<FiniteRing> {
    make_product_capped(r, s, DEFAULT_MAX_RING_SIZE)
}

pub fn make_product_capped(r: &FiniteRing, s: &FiniteRing, cap: usize) -> Result<FiniteRing> {
    let m = s.size();
    let size = r
        .size()
        .checked_mul(m)
        .filter(|&n| n <= cap)
        .ok_or_else(|| Error::capacity(format!("{} x {}", r.name(), s.name()), r.size().saturating_mul(m), cap))?;
    let split = |e: Elem| (e / m, e % m);
    let labels = (0..size)
        .map(|e| {
            let (a, b) = split(e);
            format!("({},{})", r.label(a), s.label(b))
        })
        .collect();
    FiniteRing::from_fn(
        format!("{} x {}", r.name(), s.name()),
        size,
        r.one() * m + s.one(),
        |x, y| {
            let ((a1, b1), (a2, b2)) = (split(x), split(y));
            r.add(a1, a2) * m + s.add(b1, b2)
        },
        |x, y| {
            let ((a1, b1), (a2, b2)) = (split(x), split(y));
            r.mul(a1, a2) * m + s.mul(b1, b2)
        },
        labels,
    )
}

/// `R[t]/(f)` for a monic `f`, given as coefficients of `R` from the
/// constant term up. Elements are coefficient vectors `(c_0, .., c_{d-1})`
/// with index `sum c_i |R|^i`.
pub fn make_polyquot(r: &FiniteRing, modulus: &[Elem]) -> Result<FiniteRing> {
    make_polyquot_capped(r, modulus, DEFAULT_MAX_RING_SIZE)
}

pub fn make_polyquot_capped(r: &FiniteRing, modulus: &[Elem], cap: usize) -> Result<FiniteRing> {
    let name = format!("{}[t]/({})", r.name(), render_poly(r, modulus));
    let (&lead, lower) = modulus
        .split_last()
        .ok_or_else(|| Error::InvalidConstruction(format!("{name}: empty modulus")))?;
    let degree = lower.len();
    if degree == 0 {
        return Err(Error::InvalidConstruction(format!("{name}: modulus must have degree at least 1")));
    }
    if lead != r.one() {
        return Err(Error::InvalidConstruction(format!("{name}: modulus is not monic")));
    }
    if let Some(&bad) = modulus.iter().find(|&&c| c >= r.size()) {
        return Err(Error::InvalidConstruction(format!("{name}: coefficient {bad} outside base ring")));
    }
    let q = r.size();
    let size = (0..degree)
        .try_fold(1usize, |acc, _| acc.checked_mul(q).filter(|&n| n <= cap))
        .ok_or_else(|| Error::capacity(name.clone(), q.saturating_pow(degree as u32), cap))?;

    let decode = |e: Elem| -> Vec<Elem> {
        let mut e = e;
        (0..degree)
            .map(|_| {
                let c = e % q;
                e /= q;
                c
            })
            .collect()
    };
    let encode = |coeffs: &[Elem]| -> Elem { coeffs.iter().rev().fold(0, |acc, &c| acc * q + c) };
    let mul = |x: Elem, y: Elem| -> Elem {
        let (a, b) = (decode(x), decode(y));
        let mut prod = vec![0; 2 * degree - 1];
        for (i, &ai) in a.iter().enumerate() {
            for (j, &bj) in b.iter().enumerate() {
                prod[i + j] = r.add(prod[i + j], r.mul(ai, bj));
            }
        }
        // t^d = -(c_0 + .. + c_{d-1} t^{d-1})
        for k in (degree..prod.len()).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for (j, &mj) in lower.iter().enumerate() {
                let idx = k - degree + j;
                prod[idx] = r.sub(prod[idx], r.mul(c, mj));
            }
        }
        encode(&prod[..degree])
    };
    let add = |x: Elem, y: Elem| -> Elem {
        let (a, b) = (decode(x), decode(y));
        let sum: Vec<Elem> = a.iter().zip(&b).map(|(&u, &v)| r.add(u, v)).collect();
        encode(&sum)
    };
    let labels = (0..size).map(|e| render_poly_element(r, &decode(e))).collect();
    FiniteRing::from_fn(name, size, r.one(), add, mul, labels)
}

fn render_poly_element(r: &FiniteRing, coeffs: &[Elem]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| {
            let coeff = atomic_label(r.label(c));
            match (i, c == r.one()) {
                (0, _) => coeff,
                (1, true) => "t".to_string(),
                (1, false) => format!("{coeff}t"),
                (_, true) => format!("t^{i}"),
                (_, false) => format!("{coeff}t^{i}"),
            }
        })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}

fn render_poly(r: &FiniteRing, coeffs: &[Elem]) -> String {
    let mut terms: Vec<String> = Vec::new();
    for (i, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 || c >= r.size() {
            continue;
        }
        let coeff = atomic_label(r.label(c));
        let one = c == r.one();
        terms.push(match (i, one) {
            (0, _) => coeff,
            (1, true) => "t".into(),
            (1, false) => format!("{coeff}t"),
            (_, true) => format!("t^{i}"),
            (_, false) => format!("{coeff}t^{i}"),
        });
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

/// `R / I`. Each coset is represented by its minimal-index member, and
/// cosets are numbered in increasing order of that representative.
pub fn quotient_ring(r: &FiniteRing, ideal: &Ideal) -> Result<FiniteRing> {
    Ideal::verify(r, ideal.members())?;
    if ideal.len() == r.size() {
        return Err(Error::InvalidConstruction(format!(
            "{}: quotient by the whole ring is the zero ring",
            r.name()
        )));
    }
    let n = r.size();
    let mut rep_of = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for x in 0..n {
        if rep_of[x] != usize::MAX {
            continue;
        }
        let class = reps.len();
        reps.push(x);
        for i in ideal.members().iter() {
            rep_of[r.add(x, i)] = class;
        }
    }
    let labels = reps.iter().map(|&x| r.label(x).to_string()).collect();
    let members: Vec<String> = ideal.members().iter().map(|e| e.to_string()).collect();
    FiniteRing::from_fn(
        format!("quot({},[{}])", r.name(), members.join(",")),
        reps.len(),
        rep_of[r.one()],
        |a, b| rep_of[r.add(reps[a], reps[b])],
        |a, b| rep_of[r.mul(reps[a], reps[b])],
        labels,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn units(r: &FiniteRing) -> Vec<Elem> {
        r.units().to_vec()
    }

    /// Units by scanning all products, independent of the cached set.
    fn scanned_units(r: &FiniteRing) -> Vec<Elem> {
        r.elements()
            .filter(|&a| r.elements().any(|b| r.mul(a, b) == r.one()))
            .collect()
    }

    #[test]
    fn zn_units() {
        assert_eq!(units(&make_zn(2).unwrap()), vec![1]);
        assert_eq!(units(&make_zn(6).unwrap()), vec![1, 5]);
        assert_eq!(units(&make_zn(4).unwrap()), vec![1, 3]);
        for n in 2..40 {
            let r = make_zn(n).unwrap();
            assert_eq!(units(&r), scanned_units(&r));
        }
    }

    #[test]
    fn zn_rejects_small_modulus() {
        assert!(matches!(make_zn(1), Err(Error::InvalidConstruction(_))));
        assert!(matches!(make_zn(0), Err(Error::InvalidConstruction(_))));
    }

    #[test]
    fn product_z2_z3_is_z6() {
        let z2 = make_zn(2).unwrap();
        let z3 = make_zn(3).unwrap();
        let z6 = make_zn(6).unwrap();
        let p = make_product(&z2, &z3).unwrap();
        assert_eq!(p.size(), 6);
        assert_eq!(p.unit_count(), 2);
        // CRT: (a, b) at index 3a + b corresponds to the residue x with x = a mod 2, x = b mod 3.
        let bijection: Vec<Elem> = (0..6)
            .map(|e| (0..6).find(|&x| x % 2 == e / 3 && x % 3 == e % 3).unwrap())
            .collect();
        assert!(p.is_isomorphic_under(&z6, &bijection));
        p.check_axioms().unwrap();
    }

    #[test]
    fn product_z2_z2() {
        let z2 = make_zn(2).unwrap();
        let p = make_product(&z2, &z2).unwrap();
        assert_eq!(p.size(), 4);
        assert_eq!(units(&p), vec![3]);
        assert_eq!(p.label(3), "(1,1)");
        assert_eq!(p.one(), 3);
    }

    #[test]
    fn product_cap() {
        let z64 = make_zn(64).unwrap();
        assert_eq!(make_product(&z64, &z64).unwrap().size(), 4096);
        let z65 = make_zn(65).unwrap();
        assert_eq!(make_product(&z64, &z65).unwrap_err().kind(), "capacity_exceeded");
    }

    #[test]
    fn polyquot_dual_numbers() {
        let z2 = make_zn(2).unwrap();
        let r = make_polyquot(&z2, &[0, 0, 1]).unwrap();
        assert_eq!(r.size(), 4);
        r.check_axioms().unwrap();
        let nilpotent: Vec<Elem> = r.elements().filter(|&a| a != 0 && r.mul(a, a) == 0).collect();
        assert_eq!(nilpotent, vec![2]);
        assert_eq!(r.label(2), "t");
        assert_eq!(r.label(3), "1+t");
    }

    #[test]
    fn polyquot_field_of_four() {
        let z2 = make_zn(2).unwrap();
        let f4 = make_polyquot(&z2, &[1, 1, 1]).unwrap();
        f4.check_axioms().unwrap();
        assert_eq!(units(&f4), vec![1, 2, 3]);
    }

    #[test]
    fn polyquot_degree_one_is_base() {
        let z4 = make_zn(4).unwrap();
        let r = make_polyquot(&z4, &[0, 1]).unwrap();
        assert!(r.is_isomorphic_under(&z4, &[0, 1, 2, 3]));
    }

    #[test]
    fn polyquot_errors() {
        let z4 = make_zn(4).unwrap();
        assert!(matches!(make_polyquot(&z4, &[0, 2]), Err(Error::InvalidConstruction(_))));
        assert!(matches!(make_polyquot(&z4, &[1]), Err(Error::InvalidConstruction(_))));
        assert_eq!(make_polyquot(&z4, &[0, 0, 0, 0, 0, 0, 0, 1]).unwrap_err().kind(), "capacity_exceeded");
    }

    #[test]
    fn polyquot_with_nontrivial_reduction() {
        // Z3[t]/(t^2 + 2t + 2): t^2 = t + 1
        let z3 = make_zn(3).unwrap();
        let r = make_polyquot(&z3, &[2, 2, 1]).unwrap();
        r.check_axioms().unwrap();
        let t = 3; // (0, 1)
        assert_eq!(r.mul(t, t), 4); // 1 + t
    }

    #[test]
    fn quotients() {
        let z4 = make_zn(4).unwrap();
        let q = quotient_ring(&z4, &Ideal::principal(&z4, 2)).unwrap();
        assert!(q.is_isomorphic_under(&make_zn(2).unwrap(), &[0, 1]));

        let z6 = make_zn(6).unwrap();
        let q = quotient_ring(&z6, &Ideal::zero(&z6)).unwrap();
        assert!(q.is_isomorphic_under(&z6, &[0, 1, 2, 3, 4, 5]));

        // {0,2,4} has index 2 in Z6, so the quotient is Z2; {0,3} gives Z3
        let q = quotient_ring(&z6, &Ideal::principal(&z6, 2)).unwrap();
        assert_eq!(q.size(), 2);
        assert!(q.is_isomorphic_under(&make_zn(2).unwrap(), &[0, 1]));
        let q = quotient_ring(&z6, &Ideal::principal(&z6, 3)).unwrap();
        assert_eq!(q.size(), 3);
        assert!(q.is_isomorphic_under(&make_zn(3).unwrap(), &[0, 1, 2]));
    }

    #[test]
    fn quotient_rejects_non_ideal() {
        let z6 = make_zn(6).unwrap();
        let bogus = Ideal::from_members_unchecked(crate::set::ElementSet::from_elements(6, [0, 2]));
        assert!(matches!(quotient_ring(&z6, &bogus), Err(Error::InvalidIdeal(_))));
        assert!(matches!(
            quotient_ring(&z6, &Ideal::whole(&z6)),
            Err(Error::InvalidConstruction(_))
        ));
    }
}
