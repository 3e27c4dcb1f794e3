use biquat::{decompose, Biquaternion, Quaternion};

/// How a single biquaternion is cut into summands for a product table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Split {
    /// Use the parts as given.
    None,
    /// One summand per nonzero coefficient of `1, i, j, k, I, iI, jI, kI`.
    Basis,
    /// `a`, `bμ`, `cI`, `dνI`, dropping zero terms.
    Decomposed,
}

pub fn split_parts(q: &Biquaternion, split: Split) -> Vec<Biquaternion> {
    match split {
        Split::None => vec![*q],
        Split::Basis => q
            .to_array()
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0.0)
            .map(|(n, &c)| {
                let mut coefs = [0.0; 8];
                coefs[n] = c;
                Biquaternion::from_array(coefs)
            })
            .collect(),
        Split::Decomposed => {
            let f = decompose(q);
            [
                Biquaternion::scalar(f.a),
                Biquaternion::from_real(f.mu_vector() * f.b),
                Biquaternion::from_imag(Quaternion::real(f.c)),
                Biquaternion::from_imag(f.nu_vector() * f.d),
            ]
            .into_iter()
            .filter(|p| p.coefficient_norm() != 0.0)
            .collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_split_sums_back() {
        let q = Biquaternion::from_array([0.0, 1.0, 1.0, 1.0, 0.0, 0.0, 1.0, -1.0]);
        let parts = split_parts(&q, Split::Basis);
        assert_eq!(parts.len(), 5);
        assert_eq!(parts.iter().copied().sum::<Biquaternion>(), q);
    }

    #[test]
    fn decomposed_split() {
        let q = Biquaternion::from_array([0.5, 3.0, 0.0, 4.0, 0.0, 0.0, 0.0, -2.0]);
        let parts = split_parts(&q, Split::Decomposed);
        assert_eq!(parts.len(), 3);
        assert!(parts.iter().copied().sum::<Biquaternion>().max_abs_diff(&q) < 1e-15);
        assert_eq!(split_parts(&Biquaternion::ZERO, Split::Decomposed), vec![]);
    }
}
