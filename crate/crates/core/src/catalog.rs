//! Fixed reference weights: thirty unitary ones, ten per condition family,
//! and thirty dominant non-unitary perturbations of them.

use crate::classifier::Condition;
use crate::superweights::{Signature, Weight};

#[derive(Debug, Clone, Copy)]
pub struct Entry {
    pub sig: (usize, usize, usize),
    pub weight: &'static str,
    /// The condition the weight satisfies (positive list) or was pushed off of (negative list).
    pub condition: Condition,
}

impl Entry {
    pub fn signature(&self) -> Signature {
        let (p, q, n) = self.sig;
        Signature::new(p, q, n).expect("catalog signature")
    }

    pub fn weight(&self) -> Weight {
        Weight::parse(self.signature(), self.weight).expect("catalog weight")
    }
}

const fn e(sig: (usize, usize, usize), weight: &'static str, condition: Condition) -> Entry {
    Entry {
        sig,
        weight,
        condition,
    }
}

use Condition::*;

pub const POSITIVE: &[Entry] = &[
    // U1 / U2
    e((1, 1, 1), "-3,1;1/2", U1),
    e((1, 1, 1), "-4,0;2", U1),
    e((1, 1, 1), "-1,1;0", U2),
    e((1, 1, 1), "-3/2,1;1/2", U2),
    e((2, 1, 1), "-3,-3,1;0", U1),
    e((2, 1, 1), "-7/2,-9/2,1/2;1/2", U1),
    e((2, 1, 1), "-2,-2,1;1", U2),
    e((2, 1, 1), "-5/2,-7/2,1/2;1/2", U2),
    e((1, 2, 1), "-4,2,1;1/2", U1),
    e((1, 2, 1), "-3,1,1;1", U2),
    // U3 / U4
    e((1, 1, 2), "-4,1;1,0", U3),
    e((1, 1, 2), "-7/2,1/2;3/2,1/2", U3),
    e((1, 1, 2), "-3,2;0,-1", U3),
    e((1, 1, 2), "-6,3;2,-2", U3),
    e((1, 1, 2), "-10/3,4/3;2/3,-1/3", U3),
    e((1, 1, 2), "-2,1;1,0", U4),
    e((1, 1, 2), "-5/2,1/2;3/2,1/2", U4),
    e((1, 1, 2), "-3,2;2,-1", U4),
    e((1, 1, 2), "-1,1;0,0", U4),
    e((1, 1, 2), "-8/3,4/3;5/3,-1/3", U4),
    // U5 / U6
    e((1, 1, 1), "-1,0;0", U5),
    e((1, 1, 1), "-5/2,1/2;-1/2", U5),
    e((1, 1, 1), "0,0;0", U6),
    e((1, 1, 1), "1/2,1/2;-1/2", U6),
    e((2, 1, 1), "-2,-3,0;0", U5),
    e((2, 1, 1), "-1,-1,0;0", U6),
    e((2, 1, 1), "1/2,1/2,1/2;-1/2", U6),
    e((1, 2, 1), "-3,0,0;0", U5),
    e((1, 2, 1), "-1,1,0;0", U6),
    e((1, 1, 2), "-5/2,1/2;-1/2,-1/2", U5),
];

pub const NEGATIVE: &[Entry] = &[
    e((1, 1, 1), "-1,1;1/2", U1),
    e((1, 1, 1), "-5/2,0;2", U1),
    e((1, 1, 1), "-1/2,1;0", U2),
    e((1, 1, 1), "-1,1;1/2", U2),
    e((2, 1, 1), "-3,-3,1;3/2", U1),
    e((2, 1, 1), "-7/2,-9/2,1/2;2", U1),
    e((2, 1, 1), "-2,-2,1;1/2", U2),
    e((2, 1, 1), "-5/2,-7/2,1/2;1", U2),
    e((1, 2, 1), "-2,2,1;1/2", U1),
    e((1, 2, 1), "-5/2,1,1;1", U2),
    e((1, 1, 2), "-4,1/2;1,0", U3),
    e((1, 1, 2), "-7/2,0;3/2,1/2", U3),
    e((1, 1, 2), "-3,3/2;0,-1", U3),
    e((1, 1, 2), "-6,5/2;2,-2", U3),
    e((1, 1, 2), "-10/3,5/6;2/3,-1/3", U3),
    e((1, 1, 2), "-3/2,1;1,0", U4),
    e((1, 1, 2), "-2,1/2;3/2,1/2", U4),
    e((1, 1, 2), "-5/2,2;2,-1", U4),
    e((1, 1, 2), "-1,1/2;0,0", U4),
    e((1, 1, 2), "-13/6,4/3;5/3,-1/3", U4),
    e((1, 1, 1), "-1,0;1/2", U5),
    e((1, 1, 1), "-5/2,0;-1/2", U5),
    e((1, 1, 1), "0,1/2;0", U6),
    e((1, 1, 1), "1/2,1;-1/2", U6),
    e((2, 1, 1), "-2,-3,0;1/2", U5),
    e((2, 1, 1), "-1,-1,0;1/2", U6),
    e((2, 1, 1), "1/2,1/2,1;-1/2", U6),
    e((1, 2, 1), "-3,0,0;3/2", U5),
    e((1, 2, 1), "-1,1,0;1/2", U6),
    e((1, 1, 2), "-5/2,1;-1/2,-1/2", U5),
];
