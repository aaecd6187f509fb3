// Console entry point: tabbed layout, 2s polling for the current page.

import { ApiClient } from './api';
import { CategoryPanel } from './categories';
import { Dashboard } from './dashboard';
import { el } from './dom';
import { PagePopup } from './popup';

export const POLL_INTERVAL_MS = 2000;

export function bootConsole(root: HTMLElement, apiBase = ''): {
  panel: CategoryPanel;
  popup: PagePopup;
  dashboard: Dashboard;
  stop: () => void;
} {
  const params = new URLSearchParams(window.location.search);
  const clientId = params.get('client') ?? '127.0.0.1';
  const api = new ApiClient(apiBase);

  const tabs = el('nav', { class: 'tabs' });
  const panes: Record<string, HTMLElement> = {
    page: el('section', { id: 'pane-page' }),
    categories: el('section', { id: 'pane-categories' }),
    metrics: el('section', { id: 'pane-metrics' }),
  };
  const titles: Record<string, string> = {
    page: 'Current page',
    categories: 'Tracking choices',
    metrics: 'Metrics',
  };

  function show(name: string): void {
    for (const [key, pane] of Object.entries(panes)) {
      pane.style.display = key === name ? 'block' : 'none';
    }
    tabs.querySelectorAll('button').forEach((b) => {
      b.classList.toggle('active', b.dataset.tab === name);
    });
  }

  for (const name of Object.keys(panes)) {
    const button = el('button', { 'data-tab': name }, [titles[name]]);
    button.addEventListener('click', () => show(name));
    tabs.append(button);
  }

  root.append(el('h1', {}, ['trackwall console']), tabs,
              panes.page, panes.categories, panes.metrics);

  const panel = new CategoryPanel(api, panes.categories);
  const popup = new PagePopup(api, panes.page, clientId);
  const dashboard = new Dashboard(api, panes.metrics);

  void panel.load();
  void popup.refresh();
  void dashboard.refresh();
  const timer = setInterval(() => void popup.refresh(), POLL_INTERVAL_MS);

  const refreshBtn = el('button', { class: 'refresh' }, ['Refresh metrics']);
  refreshBtn.addEventListener('click', () => void dashboard.refresh());
  panes.metrics.before(refreshBtn);

  show('page');
  return { panel, popup, dashboard, stop: () => clearInterval(timer) };
}

declare global {
  interface Window {
    trackwallConsole?: ReturnType<typeof bootConsole>;
  }
}

if (typeof document !== 'undefined' && document.getElementById('app')) {
  window.trackwallConsole = bootConsole(document.getElementById('app')!);
}
