#include <stdio.h>
#include <string.h>
#include "lpres.h"

#define CHECK(call) do { LpresStatus s_ = (call); if (s_ != LPRES_STATUS_OK) { \
    fprintf(stderr, "%s -> %d: %s\n", #call, (int)s_, lpres_last_error()); return 1; } } while (0)

int main(void) {
    LpresGroup *g = NULL;
    CHECK(lpres_group_from_catalog("gupta-sidki", &g));

    size_t free_rank = 99;
    char *text = NULL;
    CHECK(lpres_abelianize(g, 5, &free_rank, &text));
    printf("abelianization %s free_rank %zu\n", text, free_rank);
    lpres_string_free(text);

    LpresWord *w = NULL;
    int trivial = -1;
    CHECK(lpres_word_parse(g, "a^3", &w));
    CHECK(lpres_word_is_trivial(g, w, &trivial));
    printf("a^3 trivial %d\n", trivial);
    lpres_word_free(w);

    if (lpres_group_from_catalog("no-such-group", &g) != LPRES_STATUS_UNKNOWN_ENTRY) return 2;
    printf("error %s\n", lpres_last_error());
    lpres_group_free(g);
    return 0;
}
