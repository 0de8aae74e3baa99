//! Spinorial connection coefficients of the adapted double-null form.
//!
//! The nonzero coefficients are confined to three families:
//!
//! ```text
//! Γ_{122Ḋ} = Γ_{212Ḋ} = −(1/√2) ∂^Ȧ Q_{ȦḊ}
//! Γ_{222Ḋ}            = −√2  ð^Ȧ Q_{ȦḊ}
//! Γ_{ȦḂ2Ḋ}            =  √2  ∂_(Ȧ Q_{Ḃ)Ḋ}
//! ```
//!
//! Every other undotted component Γ_{ABMṄ} and every dotted component with
//! M = 1 vanishes identically. Both tables are symmetric in their first two
//! indices. The √2 factors are exact elements of the coefficient field; they
//! cancel from all curvature quantities assembled downstream.

use spinor_core::{IndexSpec, SpinorObject, Variance};
use symkernel::Expr;

use crate::metric::PlebanskiMetric;
use crate::operators::{del, div_del_q, div_eth_q};

/// The two spinorial connection tables Γ_{ABMṄ} and Γ_{ȦḂMṄ}, stored as
/// rank-4 objects (three undotted + one dotted lower index, and two dotted +
/// one undotted + one dotted lower index, respectively).
#[derive(Debug, Clone)]
pub struct Connection {
    undotted: SpinorObject,
    dotted: SpinorObject,
}

/// Computes the spinorial connection coefficients of a metric.
pub fn connection(m: &PlebanskiMetric) -> Connection {
    let half_inv_sqrt2 = Expr::sqrt2() * Expr::ratio(-1, 2); // −1/√2
    let neg_sqrt2 = -Expr::sqrt2();
    let ddq = div_del_q(m);
    let edq = div_eth_q(m);

    let undotted = SpinorObject::from_fn(
        vec![
            IndexSpec::low(),
            IndexSpec::low(),
            IndexSpec::low(),
            IndexSpec::dlow(),
        ],
        |idx| match (idx[0], idx[1], idx[2]) {
            (1, 2, 2) | (2, 1, 2) => &half_inv_sqrt2 * &ddq[(idx[3] - 1) as usize],
            (2, 2, 2) => &neg_sqrt2 * &edq[(idx[3] - 1) as usize],
            _ => Expr::zero(),
        },
    )
    .with_symmetry(vec![0, 1]);

    let sqrt2 = Expr::sqrt2();
    let dotted = SpinorObject::from_fn(
        vec![
            IndexSpec::dlow(),
            IndexSpec::dlow(),
            IndexSpec::low(),
            IndexSpec::dlow(),
        ],
        |idx| {
            if idx[2] != 2 {
                return Expr::zero();
            }
            let (a, b, n) = (idx[0], idx[1], idx[3]);
            // √2 ∂_(Ȧ Q_Ḃ)Ṅ
            let sym = del(&m.q_lower(b, n), m, a, Variance::Lower)
                + del(&m.q_lower(a, n), m, b, Variance::Lower);
            &sqrt2 * &(sym * Expr::ratio(1, 2))
        },
    )
    .with_symmetry(vec![0, 1]);

    Connection { undotted, dotted }
}

impl Connection {
    /// The full undotted table Γ_{ABMṄ}.
    pub fn undotted(&self) -> &SpinorObject {
        &self.undotted
    }

    /// The full dotted table Γ_{ȦḂMṄ}.
    pub fn dotted(&self) -> &SpinorObject {
        &self.dotted
    }

    /// Component Γ_{ABMṄ} (all index values in {1, 2}).
    pub fn gamma(&self, a: u8, b: u8, m: u8, ndot: u8) -> &Expr {
        self.undotted.get(&[a, b, m, ndot])
    }

    /// Component Γ_{ȦḂMṄ}.
    pub fn gamma_dotted(&self, adot: u8, bdot: u8, m: u8, ndot: u8) -> &Expr {
        self.dotted.get(&[adot, bdot, m, ndot])
    }

    /// True when every component of both tables vanishes.
    pub fn is_zero(&self) -> bool {
        self.undotted.is_zero() && self.dotted.is_zero()
    }
}
