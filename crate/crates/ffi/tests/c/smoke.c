#include <stdio.h>
#include <string.h>
#include "superrep.h"

static const char *A22 =
    "{\"vertices\":[{\"id\":1,\"type\":\"K\"},{\"id\":2,\"type\":\"K\"},"
    "{\"id\":3,\"type\":\"D\"},{\"id\":4,\"type\":\"D\"}],"
    "\"bimodules\":[{\"source\":1,\"target\":2,\"case\":\"KK\",\"d0\":1,\"d1\":0},"
    "{\"source\":2,\"target\":3,\"case\":\"KtoD\",\"rank\":1},"
    "{\"source\":3,\"target\":4,\"case\":\"DD\",\"plus\":1,\"minus\":0}]}";

int main(void) {
    SrSpecies *s = NULL;
    SrRepType t;
    char *dim = NULL;
    if (sr_species_from_json(A22, &s) != SR_STATUS_OK) return 1;
    if (sr_species_classify(s, SR_METHOD_BOTH, &t) != SR_STATUS_OK || t != SR_REP_TYPE_FINITE) return 2;
    if (sr_species_tensor_dim(s, &dim) != SR_STATUS_OK || strcmp(dim, "17") != 0) return 3;
    sr_string_free(dim);
    sr_species_free(s);
    if (sr_species_from_json("{", &s) != SR_STATUS_INVALID || sr_last_error() == NULL) return 4;
    printf("ok %s\n", sr_version());
    return 0;
}
