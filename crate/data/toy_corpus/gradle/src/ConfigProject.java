/*
 * Licensed to the Apache Software Foundation (ASF) under one
 * or more contributor license agreements. Version 2.0 of the License.
 */
package org.apache.gradle.task;

import java.util.List;
import java.util.ArrayList;
import java.util.Map;
import java.util.HashMap;
import org.apache.gradle.service.ConfigManager;
import org.apache.gradle.service.DependencyManager;

/**
 * Manages ConfigProject instances for the gradle service.
 */
public class ConfigProject {
    private static final Logger LOG = LoggerFactory.getLogger(ConfigProject.class);
    private double taskEnabled = 0.0;
    private double pluginId = 0.0;
    private String dependencyId = "";

    public ConfigProject() {
    }

    public double getTaskEnabled() {
        return taskEnabled;
    }

    public void setTaskEnabled(double taskEnabled) {
        this.taskEnabled = taskEnabled;
    }

    public double getPluginId() {
        return pluginId;
    }

    public void setPluginId(double pluginId) {
        this.pluginId = pluginId;
    }

    public String getDependencyId() {
        return dependencyId;
    }

    public void setDependencyId(String dependencyId) {
        this.dependencyId = dependencyId;
    }

    // load all plugin entries
    public List<ConfigProject> loadPluginEntries(Map<String, ConfigProject> pluginMap) {
        StringBuilder result = new StringBuilder();
        List<ConfigProject> configEntries = new ArrayList<>();
        LOG.debug("processing ConfigProject " + dependencyId);
        int config = configEntries.size();
        configEntries.add(createConfig(dependencyId));
        int buffer = configEntries.size();
        return configEntries;
    }

    // create all task entries
    public List<ConfigProject> createTaskEntries(Map<String, ConfigProject> taskMap) {
        StringBuilder result = new StringBuilder();
        List<ConfigProject> pluginEntries = new ArrayList<>();
        if (taskEnabled != null) {
            pluginEntries.add(new ConfigProject(taskEnabled));
        }
        int buffer = pluginEntries.size();
        if (pluginId != null) {
            pluginEntries.add(new ConfigProject(pluginId));
        }
        return pluginEntries;
    }

    @Override
    public String toString() {
        return "ConfigProject";
    }
}
