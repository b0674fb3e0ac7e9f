#include <stdio.h>
#include <string.h>
#include "lrmso.h"

int main(void) {
    LrmsoGraph *g = NULL;
    if (lrmso_graph_from_json("{\"n\":4,\"edges\":[[0,1],[1,2],[2,3]]}", &g) != LRMSO_STATUS_OK) {
        return 1;
    }
    size_t set[] = {0, 1};
    size_t rank = 99;
    if (lrmso_cutrank(g, set, 2, &rank) != LRMSO_STATUS_OK || rank != 1) {
        return 2;
    }
    bool holds = false;
    if (lrmso_check(g, "existsSet X : 1 . exists x . x in X", LRMSO_STRATEGY_SUFFIX, &holds) != LRMSO_STATUS_OK || !holds) {
        return 3;
    }
    if (lrmso_check(g, "E(x, y)", LRMSO_STRATEGY_BRUTE, &holds) != LRMSO_STATUS_BAD_FORMULA) {
        return 4;
    }
    if (strlen(lrmso_last_error_message()) == 0) {
        return 5;
    }
    char *json = NULL;
    if (lrmso_enum_lowrank_json(g, 0, LRMSO_STRATEGY_SUFFIX, 0, &json) != LRMSO_STATUS_OK) {
        return 6;
    }
    printf("%s\n", json);
    lrmso_string_free(json);
    lrmso_graph_free(g);
    return 0;
}
