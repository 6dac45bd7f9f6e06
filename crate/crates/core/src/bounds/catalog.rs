use std::fmt;
use std::str::FromStr;

use super::report::Relation;
use crate::error::Error;

/// Identifier of a catalogued claim.
///
/// Two-sided or piecewise claims are split into lettered halves so that
/// every entry carries a single relation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BoundId {
    B1a,
    B1b,
    B2a,
    B2b,
    B3,
    B4,
    B5,
    B6,
    B7,
    B8,
    B9,
    B10,
    B11,
    B12,
    B13,
    B14,
    B15a,
    B15b,
    B16,
}

impl BoundId {
    pub const ALL: [BoundId; 19] = [
        BoundId::B1a,
        BoundId::B1b,
        BoundId::B2a,
        BoundId::B2b,
        BoundId::B3,
        BoundId::B4,
        BoundId::B5,
        BoundId::B6,
        BoundId::B7,
        BoundId::B8,
        BoundId::B9,
        BoundId::B10,
        BoundId::B11,
        BoundId::B12,
        BoundId::B13,
        BoundId::B14,
        BoundId::B15a,
        BoundId::B15b,
        BoundId::B16,
    ];

    pub fn as_str(self) -> &'static str {
        self.spec().code
    }

    pub fn spec(self) -> &'static BoundSpec {
        &CATALOG[self as usize]
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BoundId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let wanted = s.trim();
        BoundId::ALL
            .into_iter()
            .find(|id| {
                id.as_str().eq_ignore_ascii_case(wanted)
                    || id.spec().name.eq_ignore_ascii_case(wanted)
            })
            .ok_or_else(|| {
                Error::Domain(format!(
                    "unknown bound `{wanted}` (known: {})",
                    BoundId::ALL.map(|b| b.as_str()).join(", ")
                ))
            })
    }
}

/// Static description of one claim.
#[derive(Debug)]
pub struct BoundSpec {
    pub code: &'static str,
    pub name: &'static str,
    pub relation: Relation,
    /// The claim in ASCII, lhs first.
    pub statement: &'static str,
    /// The stated preconditions, in words.
    pub hypotheses: &'static str,
}

pub static CATALOG: [BoundSpec; 19] = [
    BoundSpec {
        code: "B1a",
        name: "irr_min_ratio_positive",
        relation: Relation::Gt,
        statement: "2*irr / (D*(D-1)^2) > 0",
        hypotheses: "tree; D >= 2",
    },
    BoundSpec {
        code: "B1b",
        name: "irr_min_ratio_below_one",
        relation: Relation::Lt,
        statement: "2*irr / (D*(D-1)^2) < 1",
        hypotheses: "tree; D >= 2",
    },
    BoundSpec {
        code: "B2a",
        name: "irr_max_lower",
        relation: Relation::Gt,
        statement: "irr > floor(2m/n) + ceil(2n/m) + 2^alpha",
        hypotheses: "tree; d_n <= 20; m > 0",
    },
    BoundSpec {
        code: "B2b",
        name: "irr_max_upper",
        relation: Relation::Lt,
        statement: "irr < ceil(2n/m) + 2^beta",
        hypotheses: "tree; d_n > 3; m > 0",
    },
    BoundSpec {
        code: "B3",
        name: "sigma_lower_maxdeg",
        relation: Relation::Ge,
        statement: "sigma >= irr + floor((n-2)/(a_r-t_m)) + D*(D_A-D_R)^2",
        hypotheses: "tree; a_r != t_m",
    },
    BoundSpec {
        code: "B4",
        name: "sigma_upper_cubes",
        relation: Relation::Le,
        statement: "sigma <= sum d^3 + irr + floor((n-2)/(a_r-t_m)) + D*(D_A-D_R)^2",
        hypotheses: "tree; a_r != t_m",
    },
    BoundSpec {
        code: "B5",
        name: "sigma_lower_conditional",
        relation: Relation::Ge,
        statement: "sigma >= irr + (floor(2n/(a_r-a_1)) + ceil(2m/n))/n + 4*n*D",
        hypotheses: "tree; a_r != a_1; n <= D_A*(a_r-a_1) + D_R*(t_m-t_1) < irr",
    },
    BoundSpec {
        code: "B6",
        name: "sigma_lower_sqrt",
        relation: Relation::Ge,
        statement: "sigma >= sqrt(lambda_D * sum d^3) - (floor(2n/lambda_A) + ceil(2m/lambda_R)) + (n-D)^2",
        hypotheses: "tree; lambda_A != 0; lambda_R != 0",
    },
    BoundSpec {
        code: "B7",
        name: "sigma_lower_t1",
        relation: Relation::Ge,
        statement: "sigma >= (1/3)*lambda_D^2*T1 - sum d^3 + irr, T1 = floor((3n+1)/2) + ceil((3m+1)/2) + floor((3D+2n)/4)",
        hypotheses: "tree",
    },
    BoundSpec {
        code: "B8",
        name: "sigma_lower_avg",
        relation: Relation::Gt,
        statement: "sigma > (n^3 + n + D*(D-1)^2) / (2*lambda_D)",
        hypotheses: "tree; lambda_D != 0",
    },
    BoundSpec {
        code: "B9",
        name: "sigma_upper_prime",
        relation: Relation::Le,
        statement: "sigma <= 2^p*(irr + 2m) + D*(D-1)^2",
        hypotheses: "tree; p prime",
    },
    BoundSpec {
        code: "B10",
        name: "sigma_max_upper",
        relation: Relation::Le,
        statement: "sigma_max <= floor(3n^2/4)*ceil(n^2/4) / (2*(D-3))",
        hypotheses: "tree; D >= 4 (strict mode: 4 <= D-3 <= n/4)",
    },
    BoundSpec {
        code: "B11",
        name: "sigma_upper_eta",
        relation: Relation::Le,
        statement: "sigma <= floor(2n^2/(3*lambda_D)) + 2^eta*(m-D)^2/(5*(n-1)^3)",
        hypotheses: "tree; n != 1; lambda_D != 0; eta defined",
    },
    BoundSpec {
        code: "B12",
        name: "sigma_lower_eta",
        relation: Relation::Gt,
        statement: "sigma > 4n - 2*eta*lambda_D - (n-eta)*floor(n/(n-eta))^2 + (n-eta)*floor(n/(n-lambda_D))",
        hypotheses: "tree; eta != n; lambda_D != n",
    },
    BoundSpec {
        code: "B13",
        name: "sigma_upper_eta1",
        relation: Relation::Le,
        statement: "sigma <= eta1*floor(n/(n-eta)) + eta1*ceil(n/(eta-lambda_D)) + sum d^3",
        hypotheses: "tree; eta != n; eta != lambda_D",
    },
    BoundSpec {
        code: "B14",
        name: "complement_identity",
        relation: Relation::Eq,
        statement: "sigma(G) + sigma(complement G) = n*M1(G) - 4m^2",
        hypotheses: "any simple graph",
    },
    BoundSpec {
        code: "B15a",
        name: "sequence_sum_product",
        relation: Relation::Ge,
        statement: "(sum a)*(a_1 + a_k) >= sum a^2 + k*a_1*a_k, a = entries non-increasing",
        hypotheses: "a non-increasing (entries are rearranged)",
    },
    BoundSpec {
        code: "B15b",
        name: "sequence_root_mean",
        relation: Relation::Le,
        statement: "k*sum a - (sum sqrt a)^2 <= k*(k-1)*(mean a - geomean a)",
        hypotheses: "a non-increasing (entries are rearranged)",
    },
    BoundSpec {
        code: "B16",
        name: "monogenic_albertson",
        relation: Relation::Eq,
        statement: "irr(G) = (n^3-4n)/12 (n even) | (n^3-n)/12 (n odd)",
        hypotheses: "G is the monogenic semigroup graph on n >= 3 vertices",
    },
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_is_indexed_by_id() {
        for id in BoundId::ALL {
            assert_eq!(format!("{id:?}"), id.spec().code);
        }
    }

    #[test]
    fn parse_ids_and_names() {
        assert_eq!("b8".parse::<BoundId>().unwrap(), BoundId::B8);
        assert_eq!("B15b".parse::<BoundId>().unwrap(), BoundId::B15b);
        assert_eq!(
            "complement_identity".parse::<BoundId>().unwrap(),
            BoundId::B14
        );
        assert!("B99".parse::<BoundId>().is_err());
    }
}
