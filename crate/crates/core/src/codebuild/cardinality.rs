use serde::Serialize;

use super::ConstructionProfile;
use crate::poly::F16Poly;

/// Closed-form size exponents for a profile.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CardinalitySummary {
    pub n: usize,
    pub k: usize,
    /// `|C| = 16^xi`.
    pub xi: usize,
    /// `|C-dual| = 16^eta`.
    pub eta: usize,
    /// `deg A_j` for `j = 1..=5k+3`; empty unless the R' form was computed.
    pub deg_a: Vec<usize>,
}

impl CardinalitySummary {
    /// `(5k+3)n - sum deg A_j`, when `deg_a` is present.
    pub fn rprime_exponent(&self) -> Option<usize> {
        if self.deg_a.is_empty() {
            return None;
        }
        Some((5 * self.k + 3) * self.n - self.deg_a.iter().sum::<usize>())
    }

    pub fn sums_to_full(&self) -> bool {
        self.xi + self.eta == 4 * self.k * self.n
    }
}

/// Weight of `deg P_c` in xi.
pub fn xi_coefficient(k: usize, c: usize) -> usize {
    match c {
        0 => 0,
        c if c <= k => 4 * k - 4 * (c - 1),
        c if c <= 2 * k => 3 * k - 3 * (c - k - 1),
        c if c <= 3 * k => 2 * k - 2 * (c - 2 * k - 1),
        c if c <= 4 * k => k - (c - 3 * k - 1),
        c if c < 5 * k => 4 * k - (c - 4 * k),
        c => match c - 5 * k {
            0 => 4 * k - 1,
            1 => 3 * k - 3,
            2 => 2 * k - 2,
            _ => k - 1,
        },
    }
}

/// Weight of `deg P_c` in eta.
pub fn eta_coefficient(k: usize, c: usize) -> usize {
    match c {
        0 => 4 * k,
        c if c <= k => 4 * (c - 1),
        c if c <= 2 * k => k + 3 * (c - k - 1),
        c if c <= 3 * k => 2 * k + 2 * (c - 2 * k - 1),
        c if c <= 4 * k => 3 * k + (c - 3 * k - 1),
        c if c < 5 * k => c - 4 * k,
        c => match c - 5 * k {
            0 => 1,
            1 => k + 3,
            2 => 2 * k + 2,
            _ => 3 * k + 1,
        },
    }
}

pub fn cardinality_xi(p: &ConstructionProfile) -> CardinalitySummary {
    let degs: Vec<usize> = (0..=p.max_class()).map(|c| p.deg(c)).collect();
    let xi = degs.iter().enumerate().map(|(c, d)| xi_coefficient(p.k, c) * d).sum();
    let eta = degs.iter().enumerate().map(|(c, d)| eta_coefficient(p.k, c) * d).sum();
    CardinalitySummary { n: p.n, k: p.k, xi, eta, deg_a: Vec::new() }
}

/// One `A_j`: the classes whose hats are summed, and the reduced generator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Slot {
    pub j: usize,
    pub classes: Vec<usize>,
    #[serde(serialize_with = "ser_display")]
    pub a: F16Poly,
}

fn ser_display<S: serde::Serializer>(p: &F16Poly, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(p)
}

/// For each `j = 1..=5k+3`, the classes whose hats make up `A_j`.
pub fn rprime_slots(k: usize) -> Vec<(usize, Vec<usize>)> {
    let twisted = |out: &mut Vec<usize>| out.extend(4 * k + 1..5 * k);
    let mut slots = Vec::new();
    slots.push((1, vec![1]));
    for j in 1..k {
        let mut c: Vec<usize> = (1..=j + 1).collect();
        c.extend((1..=j).map(|i| 4 * k + i));
        c.push(5 * k);
        slots.push((j + 1, c));
    }
    // the v^m rows: m = 1, 2, 3
    for m in 1..=3 {
        let mut c: Vec<usize> = (1..=m).map(|i| i * k + 1).collect();
        twisted(&mut c);
        c.extend((0..m).map(|i| 5 * k + i));
        c.push(1);
        slots.push((m * k + 1, c));
        for j in 1..k {
            let mut c: Vec<usize> = (0..=m).flat_map(|b| (1..=j + 1).map(move |i| b * k + i)).collect();
            twisted(&mut c);
            c.extend((0..=m).map(|i| 5 * k + i));
            slots.push((m * k + 1 + j, c));
        }
    }
    for j in 1..k {
        slots.push((4 * k + j, (1..=j).map(|i| 4 * k + i).collect()));
    }
    for t in 0..=3 {
        slots.push((5 * k + t, vec![5 * k + t]));
    }
    slots
}

/// The `A_j` generators of the R'-form plus the usual exponents.
pub fn to_rprime_form(p: &ConstructionProfile) -> (CardinalitySummary, Vec<Slot>) {
    let m = F16Poly::xn_minus_1(p.n);
    let hats: Vec<F16Poly> = (0..=p.max_class()).map(|c| p.class_hat(c)).collect();
    let slots: Vec<Slot> = rprime_slots(p.k)
        .into_iter()
        .map(|(j, classes)| {
            let a = classes.iter().fold(m.clone(), |acc, &c| acc.gcd(&hats[c]));
            Slot { j, classes, a }
        })
        .collect();
    let mut s = cardinality_xi(p);
    s.deg_a = slots.iter().map(|s| s.a.deg().unwrap_or(0)).collect();
    (s, slots)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coefficients_pair_to_4k() {
        for k in 1..=6 {
            for c in 0..=5 * k + 3 {
                assert_eq!(xi_coefficient(k, c) + eta_coefficient(k, c), 4 * k, "k={k} c={c}");
            }
        }
    }

    #[test]
    fn zero_and_full() {
        let z = cardinality_xi(&ConstructionProfile::new(5, 2).unwrap());
        assert_eq!((z.xi, z.eta), (0, 40));
        let f = cardinality_xi(&ConstructionProfile::uniform(5, 3, 1).unwrap());
        assert_eq!(f.xi, 4 * 3 * 5);
    }

    #[test]
    fn single_v_factor() {
        let p = ConstructionProfile::new(3, 1).unwrap().assign(1, 2).unwrap();
        assert_eq!(cardinality_xi(&p).xi, 3);
    }

    #[test]
    fn slot_count_and_indices() {
        for k in 1..=5 {
            let s = rprime_slots(k);
            assert_eq!(s.len(), 5 * k + 3);
            let idx: Vec<usize> = s.iter().map(|x| x.0).collect();
            let mut sorted = idx.clone();
            sorted.sort_unstable();
            assert_eq!(sorted, (1..=5 * k + 3).collect::<Vec<_>>());
        }
    }

    #[test]
    fn rprime_trivial_cases() {
        let (s, slots) = to_rprime_form(&ConstructionProfile::uniform(3, 1, 1).unwrap());
        assert_eq!(slots[0].a, F16Poly::one());
        assert_eq!(s.deg_a[0], 0);
        let (z, _) = to_rprime_form(&ConstructionProfile::new(3, 2).unwrap());
        assert_eq!(z.deg_a.iter().sum::<usize>(), 13 * 3);
        assert_eq!(z.rprime_exponent(), Some(0));
    }
}
