// Salmon's expressions for the degree-4 and degree-6 invariants of a ternary
// cubic, transcribed term by term. Any typo here trips congruence_checks.

namespace nlocus::detail {

const char* const kAronholdS =
    "- a300*a012^2*a120 + a012^2*a210^2 + a300*a012*a021*a111 - a012*a021*a201*a210"
    " - a012*a102*a120*a210"
    " + a030*a300*a012*a102 - 2*a012*a111^2*a210 + 3*a012*a111*a120*a201 - a030*a012*a201^2"
    " - a300*a021^2*a102"
    " + a021^2*a201^2 + 3*a021*a102*a111*a210 - a021*a102*a120*a201 - 2*a021*a111^2*a201"
    " + a003*a300*a021*a120"
    " - a003*a021*a210^2 + a102^2*a120^2 - a030*a102^2*a210 - 2*a102*a111^2*a120"
    " + a030*a102*a111*a201 + a111^4"
    " + a003*a111*a120*a210 - a003*a030*a300*a111 - a003*a120^2*a201 + a003*a030*a201*a210";

const char* const kAronholdT =
    "a003^2*a030^2*a300^2 - 6*a003^2*a030*a120*a210*a300 + 4*a003^2*a030*a210^3"
    " + 4*a003^2*a120^3*a300"
    " - 6*a003*a012*a021*a030*a300^2 + 18*a003*a012*a021*a120*a210*a300 - 12*a003*a012*a021*a210^3"
    " + 12*a003*a012*a030*a111*a210*a300 + 6*a003*a012*a030*a120*a201*a300"
    " - 12*a003*a012*a030*a201*a210^2"
    " - 24*a003*a012*a111*a120^2*a300 + 12*a003*a012*a111*a120*a210^2 + 6*a003*a012*a120^2*a201*a210"
    " - 24*a003*a021^2*a111*a210*a300 - 12*a003*a021^2*a120*a201*a300 + 24*a003*a021^2*a201*a210^2"
    " + 6*a003*a021*a030*a102*a210*a300 + 12*a003*a021*a030*a111*a201*a300"
    " - 12*a003*a021*a030*a201^2*a210"
    " - 12*a003*a021*a102*a120^2*a300 + 6*a003*a021*a102*a120*a210^2 + 36*a003*a021*a111^2*a120*a300"
    " + 12*a003*a021*a111^2*a210^2 - 60*a003*a021*a111*a120*a201*a210 + 24*a003*a021*a120^2*a201^2"
    " - 6*a003*a030^2*a102*a201*a300 + 4*a003*a030^2*a201^3 + 12*a003*a030*a102*a111*a120*a300"
    " - 24*a003*a030*a102*a111*a210^2 + 18*a003*a030*a102*a120*a201*a210 - 20*a003*a030*a111^3*a300"
    " + 36*a003*a030*a111^2*a201*a210 - 24*a003*a030*a111*a120*a201^2 + 12*a003*a102*a111*a120^2*a210"
    " - 12*a003*a102*a120^3*a201 - 12*a003*a111^3*a120*a210 + 12*a003*a111^2*a120^2*a201"
    " + 4*a012^3*a030*a300^2"
    " - 12*a012^3*a120*a210*a300 + 8*a012^3*a210^3 - 3*a012^2*a021^2*a300^2"
    " + 12*a012^2*a021*a111*a210*a300"
    " + 6*a012^2*a021*a120*a201*a300 - 12*a012^2*a021*a201*a210^2 - 12*a012^2*a030*a102*a210*a300"
    " - 24*a012^2*a030*a111*a201*a300 + 24*a012^2*a030*a201^2*a210 + 24*a012^2*a102*a120^2*a300"
    " + 12*a012^2*a111^2*a120*a300 - 24*a012^2*a111^2*a210^2 + 36*a012^2*a111*a120*a201*a210"
    " - 27*a012^2*a120^2*a201^2"
    " + 6*a012*a021^2*a102*a210*a300 + 12*a012*a021^2*a111*a201*a300 - 12*a012*a021^2*a201^2*a210"
    " + 18*a012*a021*a030*a102*a201*a300 - 12*a012*a021*a030*a201^3 - 60*a012*a021*a102*a111*a120*a300"
    " + 36*a012*a021*a102*a111*a210^2 - 6*a012*a021*a102*a120*a201*a210 - 12*a012*a021*a111^3*a300"
    " - 12*a012*a021*a111^2*a201*a210 + 36*a012*a021*a111*a120*a201^2 - 12*a012*a030*a102^2*a120*a300"
    " + 24*a012*a030*a102^2*a210^2 + 36*a012*a030*a102*a111^2*a300 - 60*a012*a030*a102*a111*a201*a210"
    " + 6*a012*a030*a102*a120*a201^2 + 12*a012*a030*a111^2*a201^2 - 12*a012*a102^2*a120^2*a210"
    " + 36*a012*a102*a111*a120^2*a201 + 24*a012*a111^4*a210 - 36*a012*a111^3*a120*a201"
    " + 8*a021^3*a201^3 + 24*a021^2*a102^2*a120*a300 - 27*a021^2*a102^2*a210^2"
    " + 12*a021^2*a102*a111^2*a300"
    " + 36*a021^2*a102*a111*a201*a210 - 12*a021^2*a102*a120*a201^2 - 24*a021^2*a111^2*a201^2"
    " + 6*a021*a030*a102^2*a201*a210 + 12*a021*a030*a102*a111*a201^2 + 36*a021*a102^2*a111*a120*a210"
    " - 12*a021*a102^2*a120^2*a201 - 36*a021*a102*a111^3*a210 - 12*a021*a102*a111^2*a120*a201"
    " + 4*a030^2*a102^3*a300 - 3*a030^2*a102^2*a201^2 - 12*a030*a102^3*a120*a210"
    " + 12*a030*a102^2*a111^2*a210"
    " + 12*a030*a102^2*a111*a120*a201 - 12*a030*a102*a111^3*a201 + 8*a102^3*a120^3"
    " - 24*a102^2*a111^2*a120^2"
    " - 3*a003^2*a120^2*a210^2 + 4*a003*a021^3*a300^2 - 12*a012^2*a102*a120*a210^2"
    " - 12*a012*a102*a111^2*a120*a210"
    " - 24*a021*a030*a102^2*a111*a300 + 24*a021*a111^4*a201 - 12*a021^3*a102*a201*a300"
    " + 24*a102*a111^4*a120 - 8*a111^6";

const char* const kAronholdT0 =
    "a300^2*a030^2*a003^2 - 3*a300^2*a021^2*a012^2 - 3*a030^2*a201^2*a102^2"
    " - 3*a003^2*a210^2*a120^2 - 27*a201^2*a120^2*a012^2 - 27*a210^2*a102^2*a021^2";

const char* const kCarrierH =
    "a300*a030*a003 + a300*a021*a012 + a030*a201*a102"
    " + a003*a210*a120 + a201*a120*a012 + a210*a102*a021";

}  // namespace nlocus::detail
