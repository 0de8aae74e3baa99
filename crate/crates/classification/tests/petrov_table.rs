//! The base-type condition table on synthetic Weyl coefficient lists, and
//! the adapted-frame precondition.

use classification::{petrov_type, ClassificationError, PetrovBase};
use symkernel::{Context, Expr};

fn ctx() -> Context {
    let mut ctx = Context::new();
    ctx.coordinates(&["q", "p", "x", "y"]).unwrap();
    ctx
}

#[test]
fn nonzero_discriminant_gives_type_two() {
    let one = Expr::one();
    let zero = Expr::zero();
    let base = petrov_type(&zero, &one, &one, &zero, &zero).unwrap();
    assert_eq!(base, PetrovBase::II);
}

#[test]
fn vanishing_discriminant_gives_type_d() {
    let ctx = ctx();
    // C3 = 4x with C2 = C1 = 0.
    let c3 = ctx.parse("4*x").unwrap();
    let zero = Expr::zero();
    assert_eq!(
        petrov_type(&zero, &zero, &c3, &zero, &zero).unwrap(),
        PetrovBase::D
    );
    // A nontrivial zero of the discriminant: 2·C2² = 3·C1·C3 with
    // C1 = 3, C2 = 3, C3 = 2.
    let (c1, c2, c3) = (Expr::from_int(3), Expr::from_int(3), Expr::from_int(2));
    assert_eq!(
        petrov_type(&c1, &c2, &c3, &zero, &zero).unwrap(),
        PetrovBase::D
    );
    // Perturbing one coefficient leaves the discriminant nonzero.
    let c1_off = Expr::from_int(4);
    assert_eq!(
        petrov_type(&c1_off, &c2, &c3, &zero, &zero).unwrap(),
        PetrovBase::II
    );
}

#[test]
fn vanishing_c3_distinguishes_the_lower_types() {
    let ctx = ctx();
    let zero = Expr::zero();
    let c2 = ctx.parse("q + 5").unwrap();
    assert_eq!(
        petrov_type(&zero, &c2, &zero, &zero, &zero).unwrap(),
        PetrovBase::III
    );
    let c1 = ctx.parse("x").unwrap();
    assert_eq!(
        petrov_type(&c1, &zero, &zero, &zero, &zero).unwrap(),
        PetrovBase::N
    );
    assert_eq!(
        petrov_type(&zero, &zero, &zero, &zero, &zero).unwrap(),
        PetrovBase::Minus
    );
}

#[test]
fn unadapted_frames_are_refused() {
    let zero = Expr::zero();
    let one = Expr::one();
    assert!(matches!(
        petrov_type(&zero, &zero, &zero, &zero, &one),
        Err(ClassificationError::FrameNotAdapted { coefficient: "C5" })
    ));
    let ctx = ctx();
    let c4 = ctx.parse("y").unwrap();
    assert!(matches!(
        petrov_type(&zero, &zero, &zero, &c4, &zero),
        Err(ClassificationError::FrameNotAdapted { coefficient: "C4" })
    ));
}
