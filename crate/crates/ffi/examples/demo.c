/* Prints the accelerated orbit of 27 and checks a few values. */
#include <stdio.h>
#include "hailstone.h"

static int check(HsStatus s, const char *what) {
    if (s != HS_STATUS_OK) {
        fprintf(stderr, "%s: %s\n", what, hs_status_str(s));
        return 1;
    }
    return 0;
}

int main(void) {
    uint64_t r = 0;
    if (check(hs_reflect(1, 3, &r), "reflect") || r != 4) return 1;
    if (hs_odd_part(0, &r) != HS_STATUS_UNDEFINED_AT_ZERO) return 1;

    HsTrajectory *traj = NULL;
    if (check(hs_trajectory_new(27, HS_FORMULATION_ACCELERATED, 1000, &traj), "trajectory")) return 1;
    size_t n = hs_trajectory_len(traj);
    for (size_t i = 0; i < n; i++) {
        uint64_t v;
        if (check(hs_trajectory_value(traj, i, &v), "value")) return 1;
        printf("%llu\n", (unsigned long long)v);
    }
    HsTermination why;
    hs_trajectory_termination(traj, &why);
    hs_trajectory_free(traj);
    if (why != HS_TERMINATION_POWER_OF_TWO) return 1;

    HsSequence *seq = NULL;
    if (check(hs_sequence_new(HS_SEQUENCE_KIND_RLD, 3, &seq), "sequence")) return 1;
    uint64_t buf[8];
    size_t written = 0;
    hs_sequence_copy(seq, buf, 8, &written);
    hs_sequence_free(seq);
    const uint64_t want[8] = {1, 2, 3, 2, 2, 3, 2, 1};
    for (size_t i = 0; i < 8; i++)
        if (written != 8 || buf[i] != want[i]) return 1;
    return 0;
}
