import { ApiClient } from "./api.js";
import { BoardStore } from "./store.js";
import { ConsoleView } from "./view.js";

declare global {
  interface Window {
    OPTIMIST_BASE_URL?: string;
  }
}

/** Service base URL: ?service=... beats window.OPTIMIST_BASE_URL beats the default. */
export function resolveBaseUrl(location: Location, win: Window): string {
  const fromQuery = new URLSearchParams(location.search).get("service");
  if (fromQuery) return fromQuery;
  if (win.OPTIMIST_BASE_URL) return win.OPTIMIST_BASE_URL;
  return "http://127.0.0.1:8000";
}

export function bootstrap(root: HTMLElement, baseUrl: string): ConsoleView {
  const store = new BoardStore(new ApiClient(baseUrl));
  const view = new ConsoleView(root, store);
  void store.initialize();
  return view;
}

if (typeof document !== "undefined" && document.getElementById("app")) {
  const root = document.getElementById("app") as HTMLElement;
  bootstrap(root, resolveBaseUrl(window.location, window));
}
