//! Reference trees shared by unit and integration tests.

/// English raising/control sentence with its null subject.
pub const ENGLISH_CONTROL_GOLD: &str = "(S (NP-SBJ-1 (PRP We)) (VP (VBP 're) (VP (IN about) (S (NP-SBJ (-NONE- *-1)) (VP (TO to) (VP (VB see) (SBAR (IN if) (S (NP-SBJ (NN advertising)) (VP (VBZ works))))))))) (. .))";

/// The same sentence as a parser emits it without traces.
pub const ENGLISH_CONTROL_STRIPPED: &str = "(S (NP (PRP We)) (VP (VBP 're) (VP (IN about) (S (VP (TO to) (VP (VB see) (SBAR (IN if) (S (NP (NN advertising)) (VP (VBZ works))))))))) (. .))";

/// Chinese sentence with a `*PRO*` subject in an appositive clause.
pub const CHINESE_APPOSITIVE_GOLD: &str = "(IP-HLN (NP-PN-SBJ (NR 法)) (VP (ADVP (AD 正)) (VP (VV 研究) (NP-OBJ (IP-APP (NP-SBJ (-NONE- *PRO*)) (VP (PP (P 从) (NP-PN (NR 波黑))) (VP (VV 撤军))))) (NP (NN 计划)))))";

pub const CHINESE_APPOSITIVE_STRIPPED: &str = "(IP (NP (NR 法)) (VP (ADVP (AD 正)) (VP (VV 研究) (NP (IP (VP (PP (P 从) (NP (NR 波黑))) (VP (VV 撤军))))) (NP (NN 计划)))))";

/// Relative clause with a subject trace, rooted at `TOP`.
pub const ENGLISH_RELATIVE_GOLD: &str = "(TOP (S (NP-SBJ (PRP He)) (VP (VBD found) (NP (NP (NN something)) (SBAR (WHNP-1 (WDT which)) (S (NP-SBJ (-NONE- *T*-1)) (VP (MD could) (VP (VB help))))))) (SFN .)))";

/// Linearized source (null-free) for [`ENGLISH_RELATIVE_GOLD`].
pub const ENGLISH_RELATIVE_SOURCE: &str = "(TOP (S (NP PRP )NP (VP VBD (NP (NP NN )NP (SBAR (WHNP WDT )WHNP (S (VP MD (VP VB )VP )VP )S )SBAR )NP )VP SFN )S )TOP";

/// Linearized target (with nulls) for [`ENGLISH_RELATIVE_GOLD`].
pub const ENGLISH_RELATIVE_TARGET: &str = "(TOP (S (NP PRP )NP (VP VBD (NP (NP NN )NP (SBAR (WHNP WDT )WHNP (S (NP *T* )NP (VP MD (VP VB )VP )VP )S )SBAR )NP )VP SFN )S )TOP";
