#include <stdio.h>
#include <string.h>
#include "polylog.h"

int main(void) {
    PlgClosedForm *i11 = NULL, *parsed = NULL;
    char buf[256];
    int eq = 0;
    double v = 0.0;
    if (plg_inm(1, 1, &i11) != PLG_STATUS_OK) return 1;
    if (plg_closed_parse("2 - pi^2/6", &parsed) != PLG_STATUS_OK) return 2;
    if (plg_closed_equal(i11, parsed, &eq) != PLG_STATUS_OK || !eq) return 3;
    if (plg_closed_eval(i11, &v) != PLG_STATUS_OK) return 4;
    if (plg_closed_to_string(i11, buf, sizeof buf, NULL) != PLG_STATUS_OK) return 5;
    printf("%s = %.15f\n", buf, v);
    plg_closed_free(i11);
    plg_closed_free(parsed);
    if (plg_inm(4, 3, &i11) != PLG_STATUS_CAPACITY) return 6;
    return 0;
}
