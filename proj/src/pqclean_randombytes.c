/* randombytes backend for the vendored PQClean sources.
 *
 * Default source is the kernel CSPRNG. A process-global override hook lets
 * callers route entropy through a seeded generator (used to derive shared
 * PSB keys and for reproducible simulation runs).
 */
#include "randombytes.h"

#include <stddef.h>
#include <sys/random.h>

static void (*g_override)(unsigned char *out, size_t n, void *ctx) = NULL;
static void *g_override_ctx = NULL;

void pacdosq_set_randombytes_override(void (*fn)(unsigned char *, size_t, void *), void *ctx) {
    g_override = fn;
    g_override_ctx = ctx;
}

int randombytes(uint8_t *output, size_t n) {
    if (g_override) {
        g_override(output, n, g_override_ctx);
        return 0;
    }
    size_t off = 0;
    while (off < n) {
        ssize_t got = getrandom(output + off, n - off, 0);
        if (got < 0) {
            return -1;
        }
        off += (size_t)got;
    }
    return 0;
}
