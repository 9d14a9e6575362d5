import { ApiClient } from "./api.js";
import { Playground } from "./app.js";

const root = document.getElementById("playground-root");
if (root) {
    // same-origin: the page is served by `ifnkit serve --static`
    new Playground(root, new ApiClient());
}
