//! Built-in group lists for scans.

/// Small groups covering abelian, dihedral, quaternion, extraspecial, affine,
/// special linear, direct and central product cases. All orders are at most 288.
pub const BUILTIN: &[&str] = &[
    "cyclic(2)",
    "cyclic(6)",
    "cyclic(12)",
    "elementary_abelian(2,3)",
    "elementary_abelian(3,2)",
    "direct(C4,C2)",
    "D6",
    "D8",
    "D10",
    "D12",
    "D16",
    "Q8",
    "Q16",
    "extraspecial(8,+)",
    "extraspecial(8,-)",
    "extraspecial(27,+)",
    "extraspecial(27,-)",
    "AGL(1,3)",
    "AGL(1,4)",
    "AGL(1,5)",
    "AGL(1,7)",
    "AGL(1,8)",
    "AGL(1,9)",
    "SL2(3)",
    "SL2(5)",
    "S4",
    "A5",
    "direct(SL2(3),C3)",
    "direct(SL2(3),C5)",
    "direct(SL2(3),C7)",
    "direct(AGL(1,4),C3)",
    "direct(AGL(1,4),C5)",
    "direct(AGL(1,4),C7)",
    "direct(D8,C3)",
    "direct(D6,D6)",
    "direct(Q8,C3)",
    "central(Q8,Q8)",
    "central(Q8,D8)",
    "central(SL2(3),C4)",
    "central(SL2(3),Q8)",
    "central(SL2(3),SL2(3))",
    "ac2(4,2,1)",
    "ac2(4,4,1)",
    "ac2(9,3,1)",
];

/// Members of the class-two affine family that exercise each branch of the
/// iff-criterion. The largest has order 3840, so scans of this list need
/// [`SYNTHETIC_MAX_ORDER`].
pub const SYNTHETIC: &[&str] = &[
    "ac2(4,2,1)",
    "ac2(9,3,1)",
    "ac2(8,8,1)",
    "ac2(9,9,1)",
    "ac2(16,4,2)",
    "ac2(16,16,1)",
];

pub const SYNTHETIC_MAX_ORDER: usize = 4096;
